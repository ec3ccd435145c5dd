#include "pum/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pum/error.hpp"

namespace pum {

// The second term uses -(9 x2 + 1)/10, linear rather than squared. This is
// the published form of the benchmark and is kept as is.
double franke2(double x1, double x2) {
  const double a = 9.0 * x1;
  const double b = 9.0 * x2;
  return 0.75 * std::exp(-((a - 2.0) * (a - 2.0) + (b - 2.0) * (b - 2.0)) / 4.0) +
         0.75 * std::exp(-(a + 1.0) * (a + 1.0) / 49.0 - (b + 1.0) / 10.0) +
         0.5 * std::exp(-((a - 7.0) * (a - 7.0) + (b - 3.0) * (b - 3.0)) / 4.0) -
         0.2 * std::exp(-(a - 4.0) * (a - 4.0) - (b - 7.0) * (b - 7.0));
}

// Same convention: linear (9 x2 + 1)/10 and (9 x3 + 1)/10 in the second term.
double franke3(double x1, double x2, double x3) {
  const double a = 9.0 * x1;
  const double b = 9.0 * x2;
  const double c = 9.0 * x3;
  return 0.75 * std::exp(-((a - 2.0) * (a - 2.0) + (b - 2.0) * (b - 2.0) + (c - 2.0) * (c - 2.0)) /
                         4.0) +
         0.75 * std::exp(-(a + 1.0) * (a + 1.0) / 49.0 - (b + 1.0) / 10.0 - (c + 1.0) / 10.0) +
         0.5 * std::exp(-((a - 7.0) * (a - 7.0) + (b - 3.0) * (b - 3.0) + (c - 5.0) * (c - 5.0)) /
                        4.0) -
         0.2 * std::exp(-(a - 4.0) * (a - 4.0) - (b - 7.0) * (b - 7.0) - (c - 5.0) * (c - 5.0));
}

double franke(PointView p) {
  if (p.size() == 2) return franke2(p[0], p[1]);
  if (p.size() == 3) return franke3(p[0], p[1], p[2]);
  throw ConfigError("Franke's function is defined here for dimension 2 or 3, got " +
                    std::to_string(p.size()));
}

namespace {

void check_pair(std::span<const double> truth, std::span<const double> approx) {
  if (truth.empty()) throw ConfigError("error metrics need at least one value");
  if (truth.size() != approx.size()) {
    throw ConfigError("error metric length mismatch: " + std::to_string(truth.size()) + " vs " +
                      std::to_string(approx.size()));
  }
}

}  // namespace

double mae(std::span<const double> truth, std::span<const double> approx) {
  check_pair(truth, approx);
  double m = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) m = std::max(m, std::abs(truth[i] - approx[i]));
  return m;
}

double rmse(std::span<const double> truth, std::span<const double> approx) {
  check_pair(truth, approx);
  double s = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = truth[i] - approx[i];
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(truth.size()));
}

ErrorReport error_report(std::span<const double> truth, std::span<const double> approx) {
  return {mae(truth, approx), rmse(truth, approx), truth.size()};
}

}  // namespace pum
