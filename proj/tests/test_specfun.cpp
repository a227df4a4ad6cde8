#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <vector>

#include "pfa/core.hpp"
#include "pfa/specfun.hpp"

using namespace pfa;
using namespace pfa::specfun;

namespace {

using big = boost::multiprecision::cpp_bin_float_50;

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return g;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct LogOracle {
  double nu, x, log_i, log_k;
};

// ln I_nu(x), ln K_nu(x) to 20 digits (mpmath, 40-digit arithmetic)
const LogOracle kOracle[] = {
    {0, 0.001, 2.4999998437500174652e-7, 1.9492885501921987066},
    {1, 0.5, -1.3552054470253344645, 0.50467139730465117731},
    {5, 2, -4.6227559813135498563, 2.2440073418461981624},
    {20, 10, -8.986557236723434637, 5.185956171034962709},
    {50, 100, 84.466243435178782524, -89.876132578510445022},
    {100, 300, 279.68591077878371822, -286.13552012933827791},
    {0.5, 0.1, -1.3754177876781697859, 1.2770838991417502411},
    {1.5, 1, -1.2257913526447274324, -0.08106146679532725822},
    {10.5, 7, -2.1139612601466441849, -1.1150148995987658097},
    {30.5, 50, 38.005347937403569925, -42.768698796412637077},
    {3, 700, 695.79926683793721901, -703.04350328205961038},
};

BesselOrder order_of(double nu) { return BesselOrder::from_twice(static_cast<int>(std::lround(2 * nu))); }

}  // namespace

TEST_CASE("log values match the frozen high-precision table") {
  for (const LogOracle& o : kOracle) {
    CAPTURE(o.nu);
    CAPTURE(o.x);
    CHECK(std::abs(log_bessel_i(order_of(o.nu), o.x) - o.log_i) < 1e-12 * std::max(1.0, std::abs(o.log_i)));
    CHECK(std::abs(log_bessel_k(order_of(o.nu), o.x) - o.log_k) < 1e-12 * std::max(1.0, std::abs(o.log_k)));
  }
}

TEST_CASE("tables agree with 50-digit Boost evaluations") {
  for (OrderFamily fam : {OrderFamily::Integer, OrderFamily::HalfInteger}) {
    for (double x : {0.003, 0.2, 1.0, 4.5, 33.0, 180.0}) {
      const BesselTable t(fam, x, 61);
      for (int k : {0, 1, 2, 7, 25, 60}) {
        const big nu = big(t.order(k));
        const double li = static_cast<double>(log(boost::math::cyl_bessel_i(nu, big(x))));
        const double lk = static_cast<double>(log(boost::math::cyl_bessel_k(nu, big(x))));
        CAPTURE(x);
        CAPTURE(k);
        CHECK(std::abs(t.log_i(k) - li) < 1e-12 * std::max(1.0, std::abs(li)));
        CHECK(std::abs(t.log_k(k) - lk) < 1e-12 * std::max(1.0, std::abs(lk)));
      }
    }
  }
}

TEST_CASE("I_0(1) against its power series") {
  double sum = 0.0, term = 1.0;
  for (int k = 0; k < 40; ++k) {
    sum += term;
    term *= 0.25 / ((k + 1.0) * (k + 1.0));
  }
  CHECK(rel(bessel_i(BesselOrder::integer(0), 1.0), sum) < 1e-14);
  CHECK(rel(sum, 1.266065877752008335598245) < 1e-15);
}

TEST_CASE("K_0(2) against the integral representation") {
  // int_0^inf exp(-2 cosh t) dt, evaluated to 25 digits
  CHECK(rel(bessel_k(BesselOrder::integer(0), 2.0), 0.1138938727495334356527196) < 1e-13);
}

TEST_CASE("half-integer closed forms") {
  for (double x : log_grid(1e-3, 50.0, 25)) {
    CAPTURE(x);
    const double s = std::sqrt(2.0 / (kPi * x));
    const double k = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
    CHECK(rel(bessel_i(BesselOrder::half_integer(0), x), s * std::sinh(x)) < 1e-12);
    CHECK(rel(bessel_i(BesselOrder::from_twice(-1), x), s * std::cosh(x)) < 1e-12);
    CHECK(rel(bessel_k(BesselOrder::half_integer(0), x), k) < 1e-12);
    CHECK(rel(bessel_k(BesselOrder::half_integer(1), x), k * (1.0 + 1.0 / x)) < 1e-12);
    // K'_{1/2} = -K_{1/2} (1 + 1/(2x))
    CHECK(rel(bessel_k_prime(BesselOrder::half_integer(0), x), -k * (1.0 + 0.5 / x)) < 1e-12);
    if (x > 0.1) {
      // I_{3/2} = s (cosh x - sinh x / x), cancellation-free only away from 0
      CHECK(rel(bessel_i(BesselOrder::half_integer(1), x), s * (std::cosh(x) - std::sinh(x) / x)) < 1e-11);
    }
  }
}

TEST_CASE("order symmetries and derivative special cases") {
  for (double x : {0.3, 2.0, 17.0}) {
    CHECK(bessel_i(BesselOrder::integer(-3), x) == bessel_i(BesselOrder::integer(3), x));
    CHECK(bessel_k(BesselOrder::integer(-4), x) == bessel_k(BesselOrder::integer(4), x));
    CHECK(bessel_k(BesselOrder::from_twice(-5), x) == bessel_k(BesselOrder::from_twice(5), x));
    CHECK(rel(bessel_i_prime(BesselOrder::integer(0), x), bessel_i(BesselOrder::integer(1), x)) < 1e-14);
  }
  // high-precision derivative oracle
  CHECK(rel(bessel_i_prime(BesselOrder::integer(2), 1.5), 0.53122027079699994475) < 1e-12);
  CHECK(rel(bessel_k_prime(BesselOrder::integer(2), 1.5), -1.0555957514657115825) < 1e-12);
  CHECK(rel(bessel_i_prime(BesselOrder::half_integer(7), 3.0), 0.0051725246923848642205) < 1e-12);
  CHECK(rel(bessel_k_prime(BesselOrder::half_integer(7), 3.0), -86.82840611578369203) < 1e-12);
}

TEST_CASE("Wronskian over orders and arguments") {
  // I K' - I' K = -1/x  <=>  I |K'| + I' K = 1/x
  for (double x : log_grid(1e-3, 50.0, 30)) {
    const BesselTable ti(OrderFamily::Integer, x, 41);
    const BesselTable th(OrderFamily::HalfInteger, x, 41);
    for (const BesselTable* t : {&ti, &th}) {
      for (int k = 0; k <= 40; ++k) {
        const double a = std::exp(t->log_i(k) + t->log_abs_k_prime(k) + std::log(x));
        const double b = std::exp(t->log_i_prime(k) + t->log_k(k) + std::log(x));
        CAPTURE(x);
        CAPTURE(t->order(k));
        CHECK(std::abs(a + b - 1.0) < 1e-10);
      }
    }
  }
  // scalar API at x = 1
  const BesselOrder o = BesselOrder::integer(3);
  const double w = bessel_i(o, 1.0) * bessel_k_prime(o, 1.0) - bessel_i_prime(o, 1.0) * bessel_k(o, 1.0);
  CHECK(std::abs(w + 1.0) < 1e-10);
}

TEST_CASE("three-term recurrences") {
  for (double x : log_grid(1e-3, 50.0, 30)) {
    const BesselTable ti(OrderFamily::Integer, x, 42);
    const BesselTable th(OrderFamily::HalfInteger, x, 42);
    for (const BesselTable* t : {&ti, &th}) {
      for (int k = 1; k <= 40; ++k) {
        const double nu = t->order(k);
        // I_{nu-1} - I_{nu+1} = (2 nu / x) I_nu, in units of I_nu
        const double lhs = std::exp(t->log_i(k - 1) - t->log_i(k)) - std::exp(t->log_i(k + 1) - t->log_i(k));
        CHECK(rel(lhs, 2.0 * nu / x) < 1e-9);
        // K_{nu+1} - K_{nu-1} = (2 nu / x) K_nu
        const double lhs_k = std::exp(t->log_k(k + 1) - t->log_k(k)) - std::exp(t->log_k(k - 1) - t->log_k(k));
        CHECK(rel(lhs_k, 2.0 * nu / x) < 1e-9);
      }
    }
  }
}

TEST_CASE("scaled and unscaled values agree") {
  for (double x : {0.01, 1.0, 20.0, 300.0}) {
    for (int n : {0, 1, 6, 30}) {
      const BesselOrder o = BesselOrder::integer(n);
      CHECK(rel(bessel_i(o, x), bessel_i_scaled(o, x) * std::exp(x)) < 1e-13);
      CHECK(rel(bessel_k(o, x), bessel_k_scaled(o, x) * std::exp(-x)) < 1e-13);
    }
  }
  // scaled stays representable where the unscaled value overflows
  CHECK_THROWS_AS(bessel_i(BesselOrder::integer(0), 800.0), RangeError);
  CHECK(std::isfinite(bessel_i_scaled(BesselOrder::integer(0), 800.0)));
}

TEST_CASE("argument and order validation") {
  CHECK_THROWS_AS(bessel_i(BesselOrder::integer(1), 0.0), DomainError);
  CHECK_THROWS_AS(bessel_k(BesselOrder::integer(1), -2.0), DomainError);
  CHECK_THROWS_AS(bessel_k(BesselOrder::integer(300), 1.0), DomainError);
  CHECK_NOTHROW(bessel_k(BesselOrder::integer(300), 200.0, 512));
  CHECK_THROWS_AS(BesselTable(OrderFamily::Integer, 0.0, 4), DomainError);
}

TEST_CASE("uniform-expansion helpers") {
  CHECK(debye_u(1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
  CHECK(debye_t(3.0, 0.0) == 1.0);
  CHECK(debye_t(1.0, 1.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(debye_eta(1.0) == doctest::Approx(std::sqrt(2.0) + std::log(1.0 / (1.0 + std::sqrt(2.0)))).epsilon(1e-15));
  CHECK_THROWS_AS(debye_eta(0.0), DomainError);
}

TEST_CASE("evaluation is deterministic") {
  const BesselTable a(OrderFamily::HalfInteger, 3.7, 100);
  const BesselTable b(OrderFamily::HalfInteger, 3.7, 100);
  for (int k = 0; k < 100; ++k) {
    CHECK(a.log_i(k) == b.log_i(k));
    CHECK(a.log_k(k) == b.log_k(k));
  }
}
