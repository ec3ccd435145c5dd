#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pum/geometry.hpp"
#include "pum/kdtree.hpp"
#include "pum/point_set.hpp"
#include "pum/rbf.hpp"

namespace pum {

/// Spherical subdomains of common radius centred on the in-domain nodes of
/// an m^N cell-centred grid.
struct Covering {
  PointSet centers;            // all inside the domain
  double radius = 0.0;         // radius_scale * sqrt(2) / m
  std::size_t per_axis = 0;    // m
  std::size_t grid_total = 0;  // D = m^N, counted before reduction to the domain
};

struct CoveringOptions {
  // Fraction of [0,1]^N occupied by the domain. Estimated from 10^4 Halton
  // points when absent.
  std::optional<double> volume_fraction;
  // Multiplies the sqrt(2)/m radius; 1 gives the standard covering.
  double radius_scale = 1.0;
};

/// Grid resolution for n data points: the target subdomain count is
/// round(n / 2^(N+1)) and m = max(1, round((target / fraction)^(1/N))).
std::size_t covering_per_axis(std::size_t n, std::size_t dim, double volume_fraction);

/// Builds the covering for n data points. If no grid node falls inside the
/// domain, m is increased until one does; throws ConfigError once m passes
/// 4 m0 + 16 (m0 the initial choice) or m^N would exceed 1e8.
Covering make_covering(const ConvexDomain& domain, std::size_t n,
                       const CoveringOptions& options = {});

/// Compactly supported window (1 - t)^4_+ (4t + 1) with t = distance / radius.
double shepard_window(double t) noexcept;

/// Normalized Shepard weights at x for the given active centers, all with
/// the same radius. Throws ConfigError for an empty list or when every
/// window vanishes at x.
std::vector<double> shepard_weights(PointView x, const PointSet& active_centers, double radius);

struct AssembleOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  double jitter = 0.0;   // diagonal shift for every local solve
};

/// Partition-of-unity interpolant: one local RBF fit per nonempty
/// subdomain, blended with Shepard weights.
///
/// Immutable once assembled; evaluation may run concurrently.
class PUModel {
 public:
  struct Weight {
    std::size_t subdomain;
    double weight;
  };

  struct Evaluation {
    std::vector<double> values;
    // Points no active subdomain covers; their value is the nearest
    // data value.
    std::vector<std::size_t> uncovered;
  };

  /// Fits every subdomain from the data points inside its closed ball.
  /// Subdomains capturing no data are left empty. Solve failures are
  /// rethrown with the subdomain index in the message. Throws ConfigError
  /// when a data point lies outside `domain`.
  static PUModel assemble(const ConvexDomain& domain, PointSet data, std::vector<double> values,
                          Covering covering, const Kernel& kernel,
                          const AssembleOptions& options = {});

  // As above, reusing an index already built over the data points.
  static PUModel assemble(const ConvexDomain& domain, KdTree data_index,
                          std::vector<double> values, Covering covering, const Kernel& kernel,
                          const AssembleOptions& options = {});

  const Covering& covering() const noexcept { return covering_; }
  const std::vector<std::optional<LocalInterpolant>>& locals() const noexcept { return locals_; }
  const KdTree& data_index() const noexcept { return data_index_; }
  const std::vector<double>& data_values() const noexcept { return values_; }
  const Kernel& kernel() const noexcept { return kernel_; }
  std::size_t empty_count() const noexcept { return empty_count_; }
  std::size_t dim() const noexcept { return data_index_.dim(); }

  /// Nonzero normalized weights of the active subdomains at x, ascending
  /// by subdomain index. Empty when x is uncovered.
  std::vector<Weight> weights_at(PointView x) const;

  // Number of covering balls (empty or not) containing x.
  std::size_t overlap_at(PointView x) const;

  Evaluation evaluate(const PointSet& points, unsigned threads = 0) const;

 private:
  PUModel(Covering covering, Kernel kernel, KdTree data_index, std::vector<double> values);

  // Returns false when x is uncovered.
  bool blend(PointView x, double& value) const;

  Covering covering_;
  Kernel kernel_;
  KdTree data_index_;
  KdTree center_index_;
  std::vector<double> values_;
  std::vector<std::optional<LocalInterpolant>> locals_;
  std::size_t empty_count_ = 0;
};

/// Largest number of covering balls containing any of the points: the
/// empirical overlap constant.
std::size_t max_overlap(const PUModel& model, const PointSet& points);

/// max over probes of the distance to the nearest data point.
double fill_distance(const PointSet& data, const PointSet& probes);

}  // namespace pum
