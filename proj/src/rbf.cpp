#include "pum/rbf.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "pum/error.hpp"

namespace pum {

double wendland_c2(double r, double shape) {
  if (!(r >= 0.0)) throw ConfigError("wendland_c2: distance must be nonnegative");
  return Kernel(shape)(r);
}

Kernel::Kernel(double shape) : shape_(shape) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw ConfigError("kernel shape parameter must be positive and finite");
  }
}

void Kernel::check_dimension(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw ConfigError("the Wendland C2 kernel is positive definite only for dimension 1.." +
                      std::to_string(kMaxDim) + ", got " + std::to_string(dim));
  }
}

std::vector<double> SymmetricMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* row = a_.data() + i * n_;
    double s = 0.0;
    for (std::size_t k = 0; k < n_; ++k) s += row[k] * x[k];
    y[i] = s;
  }
  return y;
}

SymmetricMatrix kernel_matrix(const PointSet& pts, const Kernel& kernel) {
  if (pts.empty()) throw ConfigError("kernel_matrix: empty point set");
  const std::size_t n = pts.size();
  SymmetricMatrix phi(n);
  constexpr double kDup2 = kDuplicateDistance * kDuplicateDistance;
  for (std::size_t i = 0; i < n; ++i) {
    phi.set(i, i, 1.0);
    for (std::size_t k = i + 1; k < n; ++k) {
      const double d2 = squared_distance(pts[i], pts[k]);
      if (d2 < kDup2) {
        throw ConfigError("duplicate points at local indices " + std::to_string(i) + " and " +
                          std::to_string(k));
      }
      phi.set(i, k, kernel(std::sqrt(d2)));
    }
  }
  return phi;
}

namespace {

// Lower-triangular Cholesky factor, row-major n x n.
std::vector<double> cholesky(const SymmetricMatrix& a, double jitter) {
  const std::size_t n = a.size();
  std::vector<double> l(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a(j, j) + jitter;
    const double* lj = l.data() + j * n;
    for (std::size_t k = 0; k < j; ++k) diag -= lj[k] * lj[k];
    if (!(diag > 0.0)) {
      throw FactorizationError(j, "Cholesky factorization failed at pivot " + std::to_string(j) +
                                      " of " + std::to_string(n) +
                                      " (matrix not positive definite; near-duplicate points?)");
    }
    const double ljj = std::sqrt(diag);
    l[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      const double* li = l.data() + i * n;
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= li[k] * lj[k];
      l[i * n + j] = s / ljj;
    }
  }
  return l;
}

void cholesky_solve_in_place(const std::vector<double>& l, std::size_t n, std::vector<double>& x) {
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= l[i * n + k] * x[k];
    x[i] = s / l[i * n + i];
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l[k * n + i] * x[k];
    x[i] = s / l[i * n + i];
  }
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<double> solve_coefficients(const SymmetricMatrix& matrix,
                                       std::span<const double> values, double jitter) {
  const std::size_t n = matrix.size();
  if (values.size() != n) {
    throw ConfigError("solve_coefficients: " + std::to_string(values.size()) +
                      " values for a system of size " + std::to_string(n));
  }
  if (jitter < 0.0) throw ConfigError("diagonal jitter must be nonnegative");
  if (jitter > 0.0) {
    std::clog << "warning: solving with diagonal jitter " << jitter
              << "; the local fit no longer interpolates its data exactly\n";
  }

  const auto l = cholesky(matrix, jitter);
  std::vector<double> c(values.begin(), values.end());
  cholesky_solve_in_place(l, n, c);

  // Up to two rounds of iterative refinement against the unjittered system.
  if (jitter == 0.0) {
    const double target = 1e-12 * std::max(1.0, max_abs(values));
    for (int round = 0; round < 2; ++round) {
      auto residual = matrix.multiply(c);
      for (std::size_t i = 0; i < n; ++i) residual[i] = values[i] - residual[i];
      if (max_abs(residual) <= target) break;
      cholesky_solve_in_place(l, n, residual);
      for (std::size_t i = 0; i < n; ++i) c[i] += residual[i];
    }
  }
  return c;
}

LocalInterpolant::LocalInterpolant(PointSet centers, std::vector<double> coefficients,
                                   Kernel kernel)
    : centers_(std::move(centers)), coefficients_(std::move(coefficients)), kernel_(kernel) {
  if (centers_.empty()) throw ConfigError("a local interpolant needs at least one center");
  if (centers_.size() != coefficients_.size()) {
    throw ConfigError("local interpolant has " + std::to_string(centers_.size()) +
                      " centers but " + std::to_string(coefficients_.size()) + " coefficients");
  }
}

double LocalInterpolant::operator()(PointView x) const {
  if (x.size() != centers_.dim()) {
    throw ConfigError("evaluation point of dimension " + std::to_string(x.size()) +
                      " for an interpolant of dimension " + std::to_string(centers_.dim()));
  }
  const double support2 = kernel_.support_radius() * kernel_.support_radius();
  double sum = 0.0;
  for (std::size_t k = 0; k < centers_.size(); ++k) {
    const double d2 = squared_distance(x, centers_[k]);
    if (d2 >= support2) continue;
    sum += coefficients_[k] * kernel_(std::sqrt(d2));
  }
  return sum;
}

LocalInterpolant fit_local(PointSet centers, std::span<const double> values, const Kernel& kernel,
                           double jitter) {
  auto coefficients = solve_coefficients(kernel_matrix(centers, kernel), values, jitter);
  return LocalInterpolant(std::move(centers), std::move(coefficients), kernel);
}

}  // namespace pum
