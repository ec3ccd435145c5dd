#include "pum/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pum/error.hpp"
#include "pum/halton.hpp"
#include "pum/parallel.hpp"

namespace pum {

namespace {

constexpr double kMaxGridPoints = 1e8;
constexpr std::size_t kFractionSamples = 10000;
// The grid may be refined up to kMaxGrowth * m + kGrowthSlack per axis while
// looking for an in-domain node.
constexpr std::size_t kMaxGrowth = 4;
constexpr std::size_t kGrowthSlack = 16;

double estimate_fraction(const ConvexDomain& domain) {
  if (domain.dim() > kHaltonMaxDim) return 1.0;
  return filter_points(domain, halton_points(kFractionSamples, domain.dim())).fraction;
}

}  // namespace

std::size_t covering_per_axis(std::size_t n, std::size_t dim, double volume_fraction) {
  if (dim == 0) throw ConfigError("covering dimension must be positive");
  if (!(volume_fraction > 0.0)) volume_fraction = 1.0;
  const double target = std::round(static_cast<double>(n) / std::ldexp(1.0, static_cast<int>(dim) + 1));
  const double m = std::round(std::pow(target / volume_fraction, 1.0 / static_cast<double>(dim)));
  return m < 1.0 ? 1 : static_cast<std::size_t>(m);
}

Covering make_covering(const ConvexDomain& domain, std::size_t n, const CoveringOptions& options) {
  if (n == 0) throw ConfigError("a covering needs at least one data point");
  if (!(options.radius_scale > 0.0)) throw ConfigError("radius scale must be positive");
  const std::size_t dim = domain.dim();
  const double fraction = 
      options.volume_fraction ? *options.volume_fraction : estimate_fraction(domain);

  const std::size_t first = covering_per_axis(n, dim, fraction);
  const std::size_t last = kMaxGrowth * first + kGrowthSlack;
  for (std::size_t m = first;; ++m) {
    if (m > last || std::pow(static_cast<double>(m), static_cast<double>(dim)) > kMaxGridPoints) {
      throw ConfigError("domain '" + domain.label() + "' contains no covering grid node for " +
                        std::to_string(first) + " <= m <= " + std::to_string(m - 1) +
                        " points per axis; it is too thin for the automatic covering, "
                        "supply a custom one");
    }
    auto kept = filter_points(domain, grid_points(dim, m));
    if (kept.kept.empty()) continue;
    Covering covering;
    covering.centers = std::move(kept.kept);
    covering.per_axis = m;
    covering.grid_total = 1;
    for (std::size_t k = 0; k < dim; ++k) covering.grid_total *= m;
    // sqrt(2) / D^(1/N) with D = m^N.
    covering.radius = options.radius_scale * std::numbers::sqrt2 / static_cast<double>(m);
    return covering;
  }
}

double shepard_window(double t) noexcept {
  if (t >= 1.0) return 0.0;
  const double u = 1.0 - t;
  const double u2 = u * u;
  return u2 * u2 * (4.0 * t + 1.0);
}

std::vector<double> shepard_weights(PointView x, const PointSet& active_centers, double radius) {
  if (active_centers.empty()) throw ConfigError("shepard_weights: no active subdomains");
  if (!(radius > 0.0)) throw ConfigError("shepard_weights: radius must be positive");
  std::vector<double> w(active_centers.size());
  double total = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    w[j] = shepard_window(distance(x, active_centers[j]) / radius);
    total += w[j];
  }
  if (!(total > 0.0)) throw ConfigError("shepard_weights: x lies outside every active support");
  for (double& v : w) v /= total;
  return w;
}

PUModel::PUModel(Covering covering, Kernel kernel, KdTree data_index, std::vector<double> values)
    : covering_(std::move(covering)),
      kernel_(kernel),
      data_index_(std::move(data_index)),
      center_index_(covering_.centers),
      values_(std::move(values)),
      locals_(covering_.centers.size()) {}

PUModel PUModel::assemble(const ConvexDomain& domain, PointSet data, std::vector<double> values,
                          Covering covering, const Kernel& kernel,
                          const AssembleOptions& options) {
  if (data.empty()) throw ConfigError("cannot assemble a model without data points");
  return assemble(domain, KdTree(std::move(data)), std::move(values), std::move(covering), kernel,
                  options);
}

PUModel PUModel::assemble(const ConvexDomain& domain, KdTree data_index,
                          std::vector<double> values, Covering covering, const Kernel& kernel,
                          const AssembleOptions& options) {
  const std::size_t dim = domain.dim();
  Kernel::check_dimension(dim);
  const PointSet& data = data_index.points();
  if (data.dim() != dim || covering.centers.dim() != dim) {
    throw ConfigError("data, covering and domain dimensions differ");
  }
  if (data.size() != values.size()) {
    throw ConfigError(std::to_string(data.size()) + " data points but " +
                      std::to_string(values.size()) + " values");
  }
  if (covering.centers.empty()) throw ConfigError("covering has no subdomains");
  if (!(covering.radius > 0.0)) throw ConfigError("covering radius must be positive");
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!domain.contains(data[i])) {
      throw ConfigError("data point " + std::to_string(i) + " lies outside domain '" +
                        domain.label() + "'");
    }
  }

  PUModel model(std::move(covering), kernel, std::move(data_index), std::move(values));
  const auto& centers = model.covering_.centers;
  const double radius = model.covering_.radius;
  const double jitter = options.jitter;

  parallel_for(centers.size(), options.threads, [&](std::size_t j) {
    const auto local = model.data_index_.range_query(centers[j], radius);
    if (local.empty()) return;
    std::vector<double> f(local.size());
    for (std::size_t k = 0; k < local.size(); ++k) f[k] = model.values_[local[k]];
    try {
      model.locals_[j] =
          fit_local(model.data_index_.points().subset(local), f, model.kernel_, jitter);
    } catch (const FactorizationError& e) {
      throw FactorizationError(e.pivot(), "subdomain " + std::to_string(j) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError("subdomain " + std::to_string(j) + ": " + e.what());
    }
  });

  for (const auto& l : model.locals_) {
    if (!l) ++model.empty_count_;
  }
  return model;
}

std::vector<PUModel::Weight> PUModel::weights_at(PointView x) const {
  std::vector<Weight> out;
  const double radius = covering_.radius;
  double total = 0.0;
  for (std::size_t j : center_index_.range_query(x, radius)) {
    if (!locals_[j]) continue;
    const double w = shepard_window(distance(x, covering_.centers[j]) / radius);
    if (w > 0.0) {
      out.push_back({j, w});
      total += w;
    }
  }
  for (auto& w : out) w.weight /= total;
  return out;
}

bool PUModel::blend(PointView x, double& value) const {
  const auto weights = weights_at(x);
  if (weights.empty()) return false;
  double sum = 0.0;
  for (const auto& w : weights) sum += w.weight * (*locals_[w.subdomain])(x);
  value = sum;
  return true;
}

std::size_t PUModel::overlap_at(PointView x) const {
  std::vector<std::size_t> hits;
  center_index_.range_query_unsorted(x, covering_.radius, hits);
  return hits.size();
}

PUModel::Evaluation PUModel::evaluate(const PointSet& points, unsigned threads) const {
  if (!points.empty() && points.dim() != dim()) {
    throw ConfigError("evaluation points of dimension " + std::to_string(points.dim()) +
                      " for a model of dimension " + std::to_string(dim()));
  }
  Evaluation result;
  result.values.resize(points.size());
  std::vector<char> covered(points.size(), 1);
  parallel_for(points.size(), threads, [&](std::size_t i) {
    if (!blend(points[i], result.values[i])) {
      covered[i] = 0;
      result.values[i] = values_[data_index_.nearest(points[i]).index];
    }
  });
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!covered[i]) result.uncovered.push_back(i);
  }
  return result;
}

std::size_t max_overlap(const PUModel& model, const PointSet& points) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    best = std::max(best, model.overlap_at(points[i]));
  }
  return best;
}

double fill_distance(const PointSet& data, const PointSet& probes) {
  if (data.empty() || probes.empty()) throw ConfigError("fill_distance needs data and probes");
  if (data.dim() != probes.dim()) throw ConfigError("fill_distance dimension mismatch");
  const KdTree tree(data);
  double worst = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    worst = std::max(worst, tree.nearest(probes[i]).distance);
  }
  return worst;
}

}  // namespace pum
