#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pum/error.hpp"
#include "pum/halton.hpp"
#include "pum/rbf.hpp"

using namespace pum;

namespace {

double max_residual(const SymmetricMatrix& a, const std::vector<double>& c,
                    const std::vector<double>& f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    long double s = 0.0L;
    for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<long double>(a(i, k)) * c[k];
    worst = std::max(worst, static_cast<double>(std::abs(s - f[i])));
  }
  return worst;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Halton points inside a ball of radius `r` about (0.5, ..., 0.5): the
// shape of a typical local system.
PointSet local_cloud(std::size_t candidates, std::size_t dim, double r) {
  const auto all = halton_points(candidates, dim);
  PointSet out(dim);
  const std::vector<double> c(dim, 0.5);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (distance(all[i], c) <= r) out.push_back(all[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("wendland_c2 examples") {
  CHECK(wendland_c2(0.0, 0.1) == 1.0);
  CHECK(wendland_c2(0.0, 3.0) == 1.0);
  CHECK(wendland_c2(10.0, 0.1) == 0.0);
  CHECK(wendland_c2(1.0 / 3.0, 3.0) == 0.0);
  CHECK(wendland_c2(12.0, 0.1) == 0.0);
  CHECK(wendland_c2(5.0, 0.1) == doctest::Approx(0.1875).epsilon(1e-15));
  CHECK_THROWS_AS(wendland_c2(-1.0, 0.1), ConfigError);
  CHECK_THROWS_AS(Kernel(0.0), ConfigError);
  CHECK_THROWS_AS(Kernel(-2.0), ConfigError);
}

TEST_CASE("wendland_c2 is nonincreasing in r") {
  for (double shape : {0.1, 1.0, 3.0}) {
    const double end = 1.2 / shape;
    double previous = wendland_c2(0.0, shape);
    for (int i = 1; i <= 10000; ++i) {
      const double value = wendland_c2(end * i / 10000.0, shape);
      CHECK(value <= previous);
      previous = value;
    }
  }
}

TEST_CASE("kernel dimension check") {
  CHECK_NOTHROW(Kernel::check_dimension(2));
  CHECK_NOTHROW(Kernel::check_dimension(3));
  CHECK_THROWS_AS(Kernel::check_dimension(4), ConfigError);
}

TEST_CASE("kernel_matrix examples") {
  const Kernel kernel(0.1);
  const auto single = kernel_matrix(PointSet(2, {0.2, 0.3}), kernel);
  REQUIRE(single.size() == 1);
  CHECK(single(0, 0) == 1.0);

  const auto far = kernel_matrix(PointSet(2, {0.0, 0.0, 10.0, 0.0}), kernel);
  CHECK(far(0, 1) == 0.0);
  CHECK(far(1, 0) == 0.0);
  CHECK(far(1, 1) == 1.0);

  const auto mid = kernel_matrix(PointSet(2, {0.0, 0.0, 3.0, 4.0}), kernel);
  CHECK(mid(0, 1) == doctest::Approx(0.1875).epsilon(1e-15));

  CHECK_THROWS_AS(kernel_matrix(PointSet(2), kernel), ConfigError);
}

TEST_CASE("kernel_matrix reports duplicates with their indices") {
  const PointSet pts(2, {0.1, 0.1, 0.5, 0.5, 0.3, 0.3, 0.5, 0.5});
  try {
    kernel_matrix(pts, Kernel(1.0));
    FAIL("expected a duplicate-point error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("1 and 3") != std::string::npos);
  }
}

TEST_CASE("kernel_matrix is symmetric with unit diagonal and entries in [0,1]") {
  const auto pts = local_cloud(2000, 2, 0.12);
  const auto a = kernel_matrix(pts, Kernel(0.1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a(i, i) == 1.0);
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a(i, k) == a(k, i));
      CHECK(a(i, k) >= 0.0);
      CHECK(a(i, k) <= 1.0);
    }
  }
}

TEST_CASE("solve_coefficients examples") {
  SymmetricMatrix identity(2);
  identity.set(0, 0, 1.0);
  identity.set(1, 1, 1.0);
  CHECK(solve_coefficients(identity, std::vector{2.0, -1.0}) == std::vector{2.0, -1.0});

  SymmetricMatrix one(1);
  one.set(0, 0, 1.0);
  CHECK(solve_coefficients(one, std::vector{7.0}) == std::vector{7.0});

  CHECK_THROWS_AS(solve_coefficients(one, std::vector{1.0, 2.0}), ConfigError);
}

TEST_CASE("solve_coefficients reports the failing pivot") {
  SymmetricMatrix indefinite(3);
  indefinite.set(0, 0, 1.0);
  indefinite.set(1, 1, 1.0);
  indefinite.set(2, 2, 1.0);
  indefinite.set(0, 1, 2.0);
  try {
    solve_coefficients(indefinite, std::vector{1.0, 1.0, 1.0});
    FAIL("expected a factorization error");
  } catch (const FactorizationError& e) {
    CHECK(e.pivot() == 1);
  }
}

TEST_CASE("residual oracle on local systems from the benchmark regime") {
  for (std::size_t dim : {2u, 3u}) {
    for (double shape : {0.1, 1.0, 3.0}) {
      CAPTURE(dim);
      CAPTURE(shape);
      const auto pts = local_cloud(dim == 2 ? 1600 : 27000, dim, dim == 2 ? 0.1 : 0.12);
      REQUIRE(pts.size() > 20);
      std::vector<double> f(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) f[i] = std::sin(7.0 * pts[i][0]) + pts[i][1];
      const auto a = kernel_matrix(pts, Kernel(shape));
      const auto c = solve_coefficients(a, f);
      CHECK(max_residual(a, c, f) <= 1e-10 * std::max(1.0, max_abs(f)));
    }
  }
}

TEST_CASE("jitter is reported") {
  SymmetricMatrix one(1);
  one.set(0, 0, 1.0);
  std::ostringstream captured;
  auto* old = std::clog.rdbuf(captured.rdbuf());
  const auto c = solve_coefficients(one, std::vector{2.0}, 1.0);
  std::clog.rdbuf(old);
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(captured.str().find("jitter") != std::string::npos);
  CHECK_THROWS_AS(solve_coefficients(one, std::vector{2.0}, -1.0), ConfigError);
}

TEST_CASE("eval_local reproduces data and vanishes outside the support") {
  const Kernel kernel(0.1);
  const auto pts = local_cloud(1600, 2, 0.1);
  std::vector<double> f(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) f[i] = std::exp(pts[i][0] * pts[i][1]);
  const auto interp = fit_local(pts, f, kernel);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(std::abs(eval_local(interp, pts[i]) - f[i]) <= 1e-8 * std::max(1.0, max_abs(f)));
  }
  // Support radius is 10; every center is within 1 of the origin.
  CHECK(eval_local(interp, std::array{20.0, 20.0}) == 0.0);
  CHECK_THROWS_AS(eval_local(interp, std::array{0.5, 0.5, 0.5}), ConfigError);
}

TEST_CASE("constant data round trip") {
  const PointSet pts(2, {0.1, 0.2, 0.3, 0.35, 0.5, 0.1, 0.45, 0.45, 0.2, 0.5});
  const std::vector<double> ones(5, 1.0);
  const auto interp = fit_local(pts, ones, Kernel(0.1));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(std::abs(eval_local(interp, pts[i]) - 1.0) <= 1e-8);
  }
}

TEST_CASE("permutation equivariance") {
  const Kernel kernel(1.0);
  const auto pts = local_cloud(1600, 2, 0.12);
  const std::size_t n = pts.size();
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = pts[i][0] - 2.0 * pts[i][1] * pts[i][1];

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(3);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<double> fp(n);
  for (std::size_t i = 0; i < n; ++i) fp[i] = f[perm[i]];

  const auto base = fit_local(pts, f, kernel);
  const auto shuffled = fit_local(pts.subset(perm), fp, kernel);
  const double scale = std::max(1.0, max_abs(base.coefficients()));
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(shuffled.coefficients()[i] - base.coefficients()[perm[i]]) <= 1e-8 * scale);
  }
  const auto probes = halton_points(100, 2);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    CHECK(std::abs(base(probes[i]) - shuffled(probes[i])) <= 1e-12 * scale);
  }
}
