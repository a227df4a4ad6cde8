#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pfa/concentric_spheres.hpp"
#include "pfa/core.hpp"
#include "pfa/numerics.hpp"
#include "pfa/specfun.hpp"

using namespace pfa;
using namespace pfa::numerics;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("semi-infinite quadrature of known integrals") {
  const QuadratureResult gamma2 = integrate_semi_infinite([](double b) { return b * std::exp(-b); }, 1e-10);
  CHECK(rel(gamma2.value, 1.0) < 1e-10);
  CHECK(gamma2.abs_error >= 0.0);
  CHECK(gamma2.evaluations > 0);

  const QuadratureResult gauss = integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 1e-10);
  CHECK(rel(gauss.value, std::sqrt(kPi) / 2.0) < 1e-10);

  // K_0(2) = int_0^inf exp(-2 cosh t) dt
  const QuadratureResult k0 =
      integrate_semi_infinite([](double t) { return std::exp(-2.0 * std::cosh(t)); }, 1e-12);
  CHECK(rel(k0.value, 0.1138938727495334356527196) < 1e-11);
}

TEST_CASE("l = 1 large-separation integral") {
  using specfun::BesselTable;
  auto f = [](double x) {
    const BesselTable t(specfun::OrderFamily::HalfInteger, x, 2);
    return x * x * x * std::exp(t.log_k(1) - t.log_i(1));
  };
  QuadratureOptions q;
  q.initial_cutoff = 4.0;
  const double v = integrate_semi_infinite(f, 1e-12, q).value;
  CHECK(rel(v, kPi * kPi * 0.745) < 5e-3);
  // 80-digit oracle of the same integral divided by pi^2
  CHECK(rel(v / (kPi * kPi), 0.74558029794567722) < 1e-11);
}

TEST_CASE("quadrature is linear") {
  auto f = [](double x) { return std::exp(-x) * std::cos(x); };
  auto g = [](double x) { return x * x * std::exp(-2.0 * x); };
  const double a = 2.5, b = -0.75;
  const QuadratureResult rf = integrate_semi_infinite(f, 1e-9);
  const QuadratureResult rg = integrate_semi_infinite(g, 1e-9);
  const QuadratureResult rh = integrate_semi_infinite([&](double x) { return a * f(x) + b * g(x); }, 1e-9);
  const double bound = std::abs(a) * rf.abs_error + std::abs(b) * rg.abs_error + rh.abs_error;
  CHECK(std::abs(rh.value - (a * rf.value + b * rg.value)) <= 2.0 * bound + 1e-15);
  CHECK(rel(rf.value, 0.5) < 1e-9);
  CHECK(rel(rg.value, 0.25) < 1e-9);
}

TEST_CASE("quadrature reports failure with its best estimate") {
  QuadratureOptions q;
  q.max_doublings = 8;
  try {
    integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x); }, 1e-8, q);
    FAIL("expected an accuracy error");
  } catch (const AccuracyError& e) {
    CHECK(e.best_estimate() > 0.0);
  }
  const QuadratureResult finite = integrate_interval([](double x) { return x * x; }, 0.0, 3.0, 1e-12, 0.0);
  CHECK(rel(finite.value, 9.0) < 1e-13);
}

TEST_CASE("series summation") {
  const SeriesResult geo = sum_until_converged([](long n) { return std::exp(-double(n)); }, 1e-14);
  CHECK(rel(geo.value, 1.0 / (std::exp(1.0) - 1.0)) < 1e-13);
  CHECK(geo.report.converged);
  CHECK(std::abs(geo.report.last_increment) <= 1e-14 * geo.value);

  const SeriesResult sinh_sum = sum_until_converged([](long n) { return 1.0 / std::sinh(double(n)); }, 1e-15);
  CHECK(rel(sinh_sum.value, 1.284423027303676524572858) < 1e-12);

  CHECK_THROWS_AS(sum_until_converged([](long n) { return 1.0 / double(n); }, 1e-12, 1, 1, 1000),
                  AccuracyError);
}

TEST_CASE("l-sum against its leading closed form") {
  for (double de : {0.02, 0.01, 0.005}) {
    for (int k : {1, 2}) {
      const double direct = uniform::l_sum_direct(k, de);
      const double lead = uniform::l_sum_leading(k, de);
      CAPTURE(de);
      CHECK(rel(direct, lead) < 4.0 * k * de);
    }
  }
}

TEST_CASE("log-determinants") {
  CHECK(log_det_truncated([](int, int) { return 0.0; }, 7) == 0.0);
  CHECK(log_det_truncated([](int, int) { return 0.5; }, 1) == doctest::Approx(std::log(0.5)).epsilon(1e-15));

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    const double cofactor = (1.0 - a) * (1.0 - d) - b * c;
    const double ld = log_det_truncated(
        [&](int i, int j) { return i == 0 ? (j == 0 ? a : b) : (j == 0 ? c : d); }, 2);
    CHECK(std::abs(ld - std::log(cofactor)) < 1e-12);
  }
}

TEST_CASE("log-determinant is invariant under symmetric permutation") {
  const int n = 12;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = u(rng);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  const double base = log_det_identity_minus(a);
  const double permuted = log_det_truncated([&](int i, int j) { return a(perm[i], perm[j]); }, n);
  CHECK(std::abs(base - permuted) < 1e-12);
}

TEST_CASE("log-determinant failures") {
  Eigen::MatrixXd one = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(log_det_identity_minus(one), SingularityError);
  Eigen::MatrixXd flip = Eigen::MatrixXd::Zero(2, 2);
  flip(0, 0) = 2.0;  // det(I - A) = -1
  CHECK_THROWS_AS(log_det_identity_minus(flip), DomainError);
  CHECK_THROWS(log_det_truncated([](int, int) { return 0.0; }, 0));
}
