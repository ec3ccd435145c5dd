#include "pum/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>

#include "pum/error.hpp"
#include "pum/evaluation.hpp"
#include "pum/halton.hpp"

namespace pum {

namespace {

constexpr std::size_t kMaxKLevel = 5;
constexpr std::uint64_t kMaxCandidates = 100'000'000;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

double data_value(const ExperimentConfig& config, PointView p) {
  return config.constant_data ? 1.0 : franke(p);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (dim != 2 && dim != 3) {
    throw ConfigError("dimension must be 2 or 3, got " + std::to_string(dim));
  }
  if (!n && (k_level < 1 || k_level > kMaxKLevel)) {
    throw ConfigError("k-level must be in 1..5, got " + std::to_string(k_level));
  }
  if (n && *n == 0) throw ConfigError("--n must be positive");
  if (!(shape > 0.0) || !std::isfinite(shape)) throw ConfigError("shape parameter must be > 0");
  if (eval_per_axis < 2) throw ConfigError("eval-per-axis must be >= 2");
  if (!(radius_scale > 0.0)) throw ConfigError("radius scale must be > 0");
  if (!(jitter >= 0.0)) throw ConfigError("jitter must be >= 0");
}

ConvexDomain resolve_domain(const std::string& spec, std::size_t dim) {
  constexpr std::string_view kHullPrefix = "hull:";
  if (spec.starts_with(kHullPrefix)) {
    auto domain = read_domain_file(spec.substr(kHullPrefix.size()));
    if (domain.dim() != dim) {
      throw ConfigError("domain file has dimension " + std::to_string(domain.dim()) +
                        " but --dim is " + std::to_string(dim));
    }
    return domain;
  }
  return make_domain(spec, dim);
}

Dataset generate_dataset(const ExperimentConfig& config, const ConvexDomain& domain) {
  config.validate();
  Dataset data;
  if (config.n) {
    // In-domain counts grow by at most one per candidate, so the shortest
    // prefix reaching n holds exactly n points.
    data.points = PointSet(config.dim);
    data.points.reserve(*config.n);
    std::vector<double> p(config.dim);
    std::uint64_t index = 1;
    while (data.points.size() < *config.n) {
      if (index > kMaxCandidates) {
        throw ConfigError("domain '" + domain.label() + "' yields fewer than " +
                          std::to_string(*config.n) + " points among 1e8 Halton candidates");
      }
      for (std::size_t k = 0; k < config.dim; ++k) p[k] = radical_inverse(index, kHaltonPrimes[k]);
      if (domain.contains(p)) data.points.push_back(p);
      ++index;
    }
    data.candidates = static_cast<std::size_t>(index - 1);
    data.fraction = static_cast<double>(data.points.size()) / static_cast<double>(data.candidates);
  } else {
    data.candidates = ipow(10 * config.k_level, config.dim);
    auto filtered = filter_points(domain, halton_points(data.candidates, config.dim));
    data.points = std::move(filtered.kept);
    data.fraction = filtered.fraction;
  }
  if (data.points.empty()) {
    throw ConfigError("no Halton candidate falls inside domain '" + domain.label() + "'");
  }
  data.values.resize(data.points.size());
  for (std::size_t i = 0; i < data.points.size(); ++i) {
    data.values[i] = data_value(config, data.points[i]);
  }
  return data;
}

Dataset generate_dataset(const ExperimentConfig& config) {
  config.validate();
  return generate_dataset(config, resolve_domain(config.domain, config.dim));
}

Experiment::Experiment(ExperimentConfig config)
    : config_(std::move(config)), domain_(resolve_domain(config_.domain, config_.dim)) {
  config_.validate();
  Stopwatch clock;
  dataset_ = generate_dataset(config_, domain_);
  eval_points_ = filter_points(domain_, grid_points(config_.dim, config_.eval_per_axis)).kept;
  if (eval_points_.empty()) throw ConfigError("no evaluation grid point lies inside the domain");
  truth_.resize(eval_points_.size());
  for (std::size_t i = 0; i < eval_points_.size(); ++i) {
    truth_[i] = data_value(config_, eval_points_[i]);
  }
  generate_ms_ = clock.elapsed_ms();
}

RunResult Experiment::run(double shape) const {
  const Kernel kernel(shape);
  Timings timings;
  timings.generate_ms = generate_ms_;

  Stopwatch build_clock;
  CoveringOptions covering_options;
  covering_options.volume_fraction = dataset_.fraction;
  covering_options.radius_scale = config_.radius_scale;
  Covering covering = make_covering(domain_, dataset_.points.size(), covering_options);
  KdTree data_index(dataset_.points);
  timings.build_ms = build_clock.elapsed_ms();

  Stopwatch assemble_clock;
  AssembleOptions assemble_options{config_.threads, config_.jitter};
  PUModel model = PUModel::assemble(domain_, std::move(data_index), dataset_.values,
                                    std::move(covering), kernel, assemble_options);
  timings.assemble_ms = assemble_clock.elapsed_ms();

  Stopwatch evaluate_clock;
  auto evaluation = model.evaluate(eval_points_, config_.threads);
  timings.evaluate_ms = evaluate_clock.elapsed_ms();

  const auto errors = error_report(truth_, evaluation.values);
  RunRecord record;
  record.n = dataset_.points.size();
  record.d = model.covering().centers.size();
  record.D = model.covering().grid_total;
  record.radius = model.covering().radius;
  record.shape = shape;
  record.mae = errors.mae;
  record.rmse = errors.rmse;
  record.s = errors.s;
  record.K = max_overlap(model, eval_points_);
  record.empty_count = model.empty_count();
  record.uncovered_count = evaluation.uncovered.size();
  record.timings = timings;

  return RunResult{record, std::move(model), eval_points_, truth_, std::move(evaluation.values)};
}

RunRecord run_experiment(const ExperimentConfig& config) { return Experiment(config).run().record; }

std::vector<double> sweep_samples(double low, double high, std::size_t count) {
  if (!(low > 0.0) || !(high >= low)) {
    throw ConfigError("sweep range must satisfy 0 < low <= high");
  }
  if (count == 0) throw ConfigError("sweep needs at least one sample");
  if (count == 1) return {low};
  std::vector<double> out(count);
  const double log_low = std::log(low);
  const double step = (std::log(high) - log_low) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::exp(log_low + step * static_cast<double>(i));
  out.front() = low;
  out.back() = high;
  return out;
}

std::vector<SweepPoint> shape_sweep(const ExperimentConfig& config, double low, double high,
                                    std::size_t count) {
  const auto samples = sweep_samples(low, high, count);
  const Experiment experiment(config);
  std::vector<SweepPoint> out;
  out.reserve(samples.size());
  for (double shape : samples) out.push_back({shape, experiment.run(shape).record});
  return out;
}

std::vector<RunRecord> run_table(const ExperimentConfig& base, std::optional<std::size_t> max_n) {
  std::vector<RunRecord> rows;
  for (std::size_t k = 1; k <= kMaxKLevel; ++k) {
    ExperimentConfig config = base;
    config.k_level = k;
    config.n.reset();
    const Experiment experiment(config);
    if (max_n && experiment.dataset().points.size() > *max_n) break;
    rows.push_back(experiment.run().record);
  }
  return rows;
}

void write_error_field(std::ostream& out, const RunResult& result) {
  const std::size_t dim = result.eval_points.dim();
  for (std::size_t k = 0; k < dim; ++k) out << 'x' << (k + 1) << ',';
  out << "f,I,abserr\n";
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
  };
  for (std::size_t i = 0; i < result.eval_points.size(); ++i) {
    for (double c : result.eval_points[i]) {
      put(c);
      out << ',';
    }
    put(result.truth[i]);
    out << ',';
    put(result.approx[i]);
    out << ',';
    put(std::abs(result.truth[i] - result.approx[i]));
    out << '\n';
  }
}

void export_error_field(const RunResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_error_field(out, result);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace pum
