#pragma once

#include <cstddef>
#include <span>

#include "pum/point_set.hpp"

namespace pum {

// Franke's bivariate test function.
double franke2(double x1, double x2);

// Franke's trivariate test function.
double franke3(double x1, double x2, double x3);

/// franke2 or franke3 depending on the point's dimension; throws
/// ConfigError for any other dimension.
double franke(PointView p);

struct ErrorReport {
  double mae = 0.0;
  double rmse = 0.0;
  std::size_t s = 0;
};

// Both throw ConfigError for empty or differently sized inputs.
double mae(std::span<const double> truth, std::span<const double> approx);
double rmse(std::span<const double> truth, std::span<const double> approx);

ErrorReport error_report(std::span<const double> truth, std::span<const double> approx);

}  // namespace pum
