#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pum/point_set.hpp"

namespace pum {

/// Wendland C2 profile (1 - shape*r)^4_+ (4 shape*r + 1). Support is
/// [0, 1/shape]. Throws ConfigError for negative r or nonpositive shape.
double wendland_c2(double r, double shape);

/// The Wendland C2 radial kernel with shape parameter `shape`.
///
/// Strictly positive definite only in dimensions 1..3; larger dimensions
/// are rejected by `check_dimension`.
class Kernel {
 public:
  static constexpr std::size_t kMaxDim = 3;

  explicit Kernel(double shape);

  double shape() const noexcept { return shape_; }
  double support_radius() const noexcept { return 1.0 / shape_; }

  double operator()(double r) const noexcept {
    const double t = shape_ * r;
    if (t >= 1.0) return 0.0;
    const double u = 1.0 - t;
    const double u2 = u * u;
    return u2 * u2 * (4.0 * t + 1.0);
  }

  // Throws ConfigError when the kernel is not positive definite in `dim`.
  static void check_dimension(std::size_t dim);

 private:
  double shape_;
};

/// Dense symmetric matrix with full row-major storage.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t k) const noexcept { return a_[i * n_ + k]; }
  // Writes both (i, k) and (k, i).
  void set(std::size_t i, std::size_t k, double v) noexcept {
    a_[i * n_ + k] = v;
    a_[k * n_ + i] = v;
  }

  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

// Points closer than this are treated as duplicates.
inline constexpr double kDuplicateDistance = 1e-14;

/// Interpolation matrix Phi_ik = kernel(|p_i - p_k|). Each pair is
/// evaluated once. Throws ConfigError on an empty set or on two points
/// closer than kDuplicateDistance (the message names both indices).
SymmetricMatrix kernel_matrix(const PointSet& pts, const Kernel& kernel);

/// Solves Phi c = f by Cholesky factorization. `jitter` is added to the
/// diagonal first; nonzero values break exact interpolation and are
/// reported on std::clog.
///
/// Throws FactorizationError carrying the failing pivot when the matrix is
/// not numerically positive definite.
std::vector<double> solve_coefficients(const SymmetricMatrix& matrix,
                                       std::span<const double> values, double jitter = 0.0);

/// R(x) = sum_k c_k kernel(|x - x_k|).
class LocalInterpolant {
 public:
  LocalInterpolant(PointSet centers, std::vector<double> coefficients, Kernel kernel);

  const PointSet& centers() const noexcept { return centers_; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  const Kernel& kernel() const noexcept { return kernel_; }

  double operator()(PointView x) const;

 private:
  PointSet centers_;
  std::vector<double> coefficients_;
  Kernel kernel_;
};

// Assembles and solves the local system for (centers, values).
LocalInterpolant fit_local(PointSet centers, std::span<const double> values, const Kernel& kernel,
                           double jitter = 0.0);

inline double eval_local(const LocalInterpolant& interp, PointView x) { return interp(x); }

}  // namespace pum
