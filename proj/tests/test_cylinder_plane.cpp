#include <doctest.h>

#include <cmath>

#include "pfa/cylinder_plane.hpp"
#include "pfa/numerics.hpp"
#include "pfa/specfun.hpp"

using namespace pfa;
using specfun::BesselOrder;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("configuration") {
  CHECK_THROWS_AS(CylinderPlane(0.0), DomainError);
  CHECK_THROWS_AS(CylinderPlane(0.1, 100), DomainError);
  CHECK_THROWS_AS(CylinderPlane(0.1, -1), DomainError);
  const CylinderPlane c(0.25, 21);
  CHECK(c.h_over_a() == 1.25);
  CHECK(c.max_index() == 10);
}

TEST_CASE("matrix elements") {
  const CylinderPlane c(0.1);
  // 40-digit oracle, beta = 1, n = 1, p = -1
  CHECK(rel(matrix_element(ModeSector::TE, 1, -1, 1.0, c), 0.061166598603354109255) < 1e-10);
  CHECK(rel(matrix_element(ModeSector::TM, 1, -1, 1.0, c), 0.08381888226052796338) < 1e-10);

  const double beta = 0.8;
  const double a00 = specfun::bessel_i(BesselOrder::integer(0), beta) /
                     specfun::bessel_k(BesselOrder::integer(0), beta) *
                     specfun::bessel_k(BesselOrder::integer(0), 2.0 * beta * 1.1);
  CHECK(rel(matrix_element(ModeSector::TM, 0, 0, beta, c), a00) < 1e-13);
  // K factor depends on n + p only; symmetric when the prefactor index matches
  CHECK(matrix_element(ModeSector::TM, 2, 3, beta, c) ==
        doctest::Approx(matrix_element(ModeSector::TM, -2, 3, beta, c) *
                        specfun::bessel_k(BesselOrder::integer(5), 2.2 * beta) /
                        specfun::bessel_k(BesselOrder::integer(1), 2.2 * beta)).epsilon(1e-12));
  CHECK(matrix_element(ModeSector::TE, 3, -1, beta, c) == matrix_element(ModeSector::TE, -3, 1, beta, c));
  CHECK_THROWS_AS(matrix_element(ModeSector::Both, 0, 0, 1.0, c), DomainError);
  CHECK_THROWS_AS(matrix_element(ModeSector::TM, 0, 0, 0.0, c), DomainError);
}

TEST_CASE("symmetric kernel has the determinant of the raw kernel") {
  const CylinderPlane c(0.3, 11);
  for (ModeSector s : {ModeSector::TE, ModeSector::TM}) {
    for (double beta : {0.3, 1.0, 4.0}) {
      const int half = c.max_index();
      const double raw = numerics::log_det_truncated(
          [&](int i, int j) { return matrix_element(s, i - half, j - half, beta, c); }, c.matrix_size());
      CHECK(std::abs(raw - cp_log_det(s, beta, c)) < 1e-12 * std::max(1.0, std::abs(raw)));
      const Eigen::MatrixXd k = cp_kernel(s, beta, c);
      CHECK((k - k.transpose()).norm() == 0.0);
    }
  }
}

TEST_CASE("determinants lie in (0, 1] and converge in N") {
  for (double x : {0.04, 0.07, 0.15, 0.4}) {
    const CylinderPlane c(x, 101);
    for (double beta : {1e-4, 0.01, 0.3, 3.0, 30.0, 300.0}) {
      for (ModeSector s : {ModeSector::TE, ModeSector::TM}) {
        const double ld = cp_log_det(s, beta, c);
        CHECK(std::isfinite(ld));
        CHECK(ld <= 0.0);
      }
    }
  }
  for (double x : {0.04, 0.1}) {
    for (double beta : {0.5, 5.0}) {
      double previous = 1e300;
      double last = cp_log_det(ModeSector::TM, beta, CylinderPlane(x, 11));
      for (int n : {21, 41, 81, 161}) {
        const double next = cp_log_det(ModeSector::TM, beta, CylinderPlane(x, n));
        const double change = std::abs(next - last);
        CAPTURE(x);
        CAPTURE(n);
        CHECK(change <= previous);
        previous = change;
        last = next;
      }
    }
  }
}

TEST_CASE("PFA and asymptotic forms") {
  CHECK(kCpPfaConstant == doctest::Approx(0.07175).epsilon(1e-4));
  const CylinderPlane c(0.05);
  CHECK(casimir_cp_pfa(c, ModeSector::TE).value == casimir_cp_pfa(c, ModeSector::TM).value);
  CHECK(casimir_cp_pfa(c, ModeSector::Both).value == 2.0 * casimir_cp_pfa(c, ModeSector::TM).value);
  CHECK(casimir_cp_pfa(c, ModeSector::TM).value ==
        doctest::Approx(-std::pow(0.05, -2.5) * 3.0 * kZeta4 / (32.0 * std::sqrt(2.0)) / (2.0 * kPi)));
  CHECK(casimir_cp_asymptotic(c, ModeSector::TM).value / casimir_cp_pfa(c, ModeSector::TM).value - 1.0 ==
        doctest::Approx(0.1944 * 0.05).epsilon(1e-12));
  CHECK(casimir_cp_asymptotic(c, ModeSector::TE).value / casimir_cp_pfa(c, ModeSector::TE).value - 1.0 ==
        doctest::Approx(-1.1565 * 0.05).epsilon(1e-12));
  const CylinderPlane tiny(1e-12);
  CHECK(casimir_cp_asymptotic(tiny, ModeSector::Both).value / casimir_cp_pfa(tiny, ModeSector::Both).value ==
        doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("exact energy") {
  const CylinderPlane c(0.1, 101);
  const EnergyValue both = casimir_cp_exact(c, ModeSector::Both);
  CHECK(both.value < 0.0);
  CHECK(both.truncation.matrix_size == 101);
  CHECK(both.truncation.beta_cutoff > 0.0);
  const double te = casimir_cp_exact(c, ModeSector::TE).value;
  const double tm = casimir_cp_exact(c, ModeSector::TM).value;
  CHECK(rel(te + tm, both.value) < 1e-7);

  // d/a = 0.04 lies between the two leading corrections
  const CylinderPlane close(0.04, 101);
  const double r = casimir_cp_exact(close, ModeSector::Both).value / casimir_cp_pfa(close, ModeSector::Both).value;
  CHECK(r >= 0.95);
  CHECK(r <= 1.01);
}

TEST_CASE("oversampled oracle") {
  // matrix size and tolerance both tightened
  CylinderPlaneOptions loose;
  CylinderPlaneOptions tight;
  tight.rel_tol = 1e-11;
  const double a = casimir_cp_exact(CylinderPlane(0.1, 201), ModeSector::Both, loose).value;
  const double b = casimir_cp_exact(CylinderPlane(0.1, 401), ModeSector::Both, tight).value;
  CHECK(rel(a, b) < 1e-5);
}

TEST_CASE("automatic matrix growth") {
  CylinderPlaneOptions o;
  o.auto_escalate = true;
  o.rel_tol = 1e-6;
  const EnergyValue e = casimir_cp_exact(CylinderPlane(0.5), ModeSector::TM, o);
  REQUIRE(e.truncation.matrix_size.has_value());
  CHECK(*e.truncation.matrix_size <= 201);
  CHECK(rel(e.value, casimir_cp_exact(CylinderPlane(0.5, 201), ModeSector::TM).value) < 1e-5);

  o.max_matrix_size = 41;
  try {
    casimir_cp_exact(CylinderPlane(0.05), ModeSector::TM, o);
    FAIL("expected an accuracy error");
  } catch (const AccuracyError& err) {
    CHECK(err.best_estimate() < 0.0);
  }
}

TEST_CASE("electrostatics") {
  const CylinderPlane one(std::cosh(1.0) - 1.0);
  CHECK(electro_cp_exact(one).value == doctest::Approx(kPi).epsilon(1e-14));
  const double x = 1e-4;
  const CylinderPlane small(x);
  const double r = electro_cp_exact(small).value / electro_cp_pfa(small).value;
  CHECK((r - 1.0) / x == doctest::Approx(1.0 / 12.0).epsilon(1e-3));
  CHECK(electro_cp_ratio_ntlo(small) == 1.0 + x / 12.0);
  const CylinderPlane far(1e6);
  CHECK(rel(electro_cp_exact(far).value, kPi / std::log(1e6)) < 0.10);
  CHECK(electro_cp_pfa(CylinderPlane(0.5)).value == doctest::Approx(kPi).epsilon(1e-15));
}
