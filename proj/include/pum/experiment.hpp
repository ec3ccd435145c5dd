#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pum/geometry.hpp"
#include "pum/partition.hpp"
#include "pum/point_set.hpp"

namespace pum {

/// One benchmark configuration: Halton data in a convex domain, Franke data
/// values, Wendland C2 local fits, errors on a reduced uniform grid.
struct ExperimentConfig {
  std::size_t dim = 2;
  // Builtin shape label or "hull:FILE".
  std::string domain = "disk";
  // (10 k)^dim Halton candidates are filtered to the domain.
  std::size_t k_level = 4;
  // Exact in-domain data count; overrides k_level when set.
  std::optional<std::size_t> n;
  double shape = 0.1;
  std::size_t eval_per_axis = 40;
  unsigned threads = 0;
  double radius_scale = 1.0;
  double jitter = 0.0;
  // Use f = 1 instead of Franke's function.
  bool constant_data = false;

  // Throws ConfigError describing the first invalid field.
  void validate() const;
};

ConvexDomain resolve_domain(const std::string& spec, std::size_t dim);

struct Dataset {
  PointSet points;
  std::vector<double> values;
  std::size_t candidates = 0;  // Halton points generated before filtering
  double fraction = 0.0;       // in-domain share of the candidates
};

Dataset generate_dataset(const ExperimentConfig& config, const ConvexDomain& domain);
Dataset generate_dataset(const ExperimentConfig& config);

struct Timings {
  double generate_ms = 0.0;
  double build_ms = 0.0;
  double assemble_ms = 0.0;
  double evaluate_ms = 0.0;

  double total_ms() const noexcept { return generate_ms + build_ms + assemble_ms + evaluate_ms; }
};

struct RunRecord {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t D = 0;
  double radius = 0.0;
  double shape = 0.0;
  double mae = 0.0;
  double rmse = 0.0;
  std::size_t s = 0;
  std::size_t K = 0;
  std::size_t empty_count = 0;
  std::size_t uncovered_count = 0;
  Timings timings;
};

struct RunResult {
  RunRecord record;
  PUModel model;
  PointSet eval_points;
  std::vector<double> truth;
  std::vector<double> approx;
};

/// Prepared inputs for a configuration: domain, data and evaluation grid.
/// Several runs (e.g. a shape sweep) can share one preparation.
class Experiment {
 public:
  explicit Experiment(ExperimentConfig config);

  const ExperimentConfig& config() const noexcept { return config_; }
  const ConvexDomain& domain() const noexcept { return domain_; }
  const Dataset& dataset() const noexcept { return dataset_; }
  const PointSet& eval_points() const noexcept { return eval_points_; }
  const std::vector<double>& truth() const noexcept { return truth_; }

  RunResult run() const { return run(config_.shape); }
  RunResult run(double shape) const;

 private:
  ExperimentConfig config_;
  ConvexDomain domain_;
  Dataset dataset_;
  PointSet eval_points_;
  std::vector<double> truth_;
  double generate_ms_ = 0.0;
};

RunRecord run_experiment(const ExperimentConfig& config);

struct SweepPoint {
  double shape;
  RunRecord record;
};

/// `count` log-spaced samples from low to high inclusive; a single sample
/// is `low`.
std::vector<double> sweep_samples(double low, double high, std::size_t count);

/// One run per shape sample over a single dataset.
std::vector<SweepPoint> shape_sweep(const ExperimentConfig& config, double low, double high,
                                    std::size_t count);

/// k_level = 1..5, stopping before the first level whose data count
/// exceeds `max_n` (when given).
std::vector<RunRecord> run_table(const ExperimentConfig& base,
                                 std::optional<std::size_t> max_n = std::nullopt);

// CSV columns: x1..xN, f, I, abserr.
void write_error_field(std::ostream& out, const RunResult& result);
void export_error_field(const RunResult& result, const std::filesystem::path& path);

}  // namespace pum
