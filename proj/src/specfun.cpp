#include "pfa/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pfa/core.hpp"

namespace pfa::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTableCount = 1 << 16;

struct KSeed {
  double log_k0;  // ln K_mu(x)
  double ratio;   // K_{mu+1}(x) / K_mu(x)
};

// K_0 and K_1 for x <= 2 (Temme's series at mu = 0).
KSeed k01_series(double x) {
  const double half_x = 0.5 * x;
  double ff = -std::log(half_x) - kEulerGamma;
  double sum = ff;
  double p = 0.5;
  double q = 0.5;
  double c = 1.0;
  const double d = half_x * half_x;
  double sum1 = p;
  for (int i = 1; i < 500; ++i) {
    ff = (i * ff + p + q) / (static_cast<double>(i) * i);
    c *= d / i;
    p /= i;
    q /= i;
    const double del = c * ff;
    sum += del;
    sum1 += c * (p - i * ff);
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  const double k0 = sum;
  const double k1 = sum1 * 2.0 / x;
  return {std::log(k0), k1 / k0};
}

// K_0 and K_1 for x > 2 (Steed's continued fraction at mu = 0).
KSeed k01_continued_fraction(double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 100000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h *= a1;
  const double log_k0 = 0.5 * std::log(kPi / (2.0 * x)) - std::log(s) - x;
  return {log_k0, (x + 0.5 - h) / x};
}

void check_argument(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("modified Bessel functions require a positive finite argument");
}

void check_order(BesselOrder order, int max_order) {
  if (order.magnitude().value() > max_order)
    throw DomainError("Bessel order " + std::to_string(order.value()) +
                      " exceeds the configured maximum " + std::to_string(max_order));
}

BesselTable table_for(BesselOrder order, double x, int max_order) {
  check_argument(x);
  check_order(order, max_order);
  const auto family = order.is_integer() ? OrderFamily::Integer : OrderFamily::HalfInteger;
  return BesselTable(family, x, order.index() + 2);
}

// ln I_nu for nu >= 0 plus the sign-carrying correction for negative half-integer
// orders: I_{-nu} = I_nu + (2/pi) sin(nu pi) K_nu.
struct SignedLog {
  double log_abs;
  double sign;
};

SignedLog reflected_i(const BesselTable& t, int k, BesselOrder order) {
  if (!order.is_negative() || order.is_integer()) return {t.log_i(k), 1.0};
  // nu = l + 1/2, sin(nu pi) = (-1)^l
  const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
  const double ratio = (2.0 / kPi) * std::exp(t.log_k(k) - t.log_i(k));  // K/I
  const double factor = 1.0 + sgn * ratio;
  return {t.log_i(k) + std::log(std::abs(factor)), factor < 0.0 ? -1.0 : 1.0};
}

double checked_exp(double log_value, const char* what) {
  if (log_value > std::log(std::numeric_limits<double>::max()))
    throw RangeError(std::string(what) + " overflows; use the scaled or logarithmic variant");
  return std::exp(log_value);
}

}  // namespace

BesselTable::BesselTable(OrderFamily family, double x, int count)
    : family_(family), x_(x), count_(count), base_(family == OrderFamily::Integer ? 0.0 : 0.5) {
  check_argument(x);
  if (count < 1 || count > kMaxTableCount)
    throw DomainError("Bessel table size out of range: " + std::to_string(count));

  // Entries 0..count hold orders base..base+count; the extra slot feeds ratios
  // and derivatives of the last public order.
  const int last = count;
  log_i_.resize(last + 1);
  log_k_.resize(last + 1);
  i_ratio_.resize(last + 1);
  k_ratio_.resize(last + 1);

  // Backward recurrence for rho_k = I_{nu_k+1}/I_{nu_k}:
  //   rho_{k-1} = x / (2 nu_k + x rho_k)
  // Start far enough above the highest order that the error of the initial
  // guess has decayed, and (integer family) far enough that the normalisation
  // sum has converged.
  const int start = last + 32 + static_cast<int>(std::ceil(std::sqrt(200.0 * x)));
  std::vector<double> rho(start + 1);
  {
    const double nu = base_ + start + 1.0;
    rho[start] = x / (nu + std::sqrt(nu * nu + x * x));
    for (int k = start; k > 0; --k) {
      const double nu_k = base_ + k;
      rho[k - 1] = x / (2.0 * nu_k + x * rho[k]);
    }
  }
  for (int k = 0; k <= last; ++k) i_ratio_[k] = rho[k];

  double log_i0 = 0.0;
  if (family == OrderFamily::Integer) {
    // e^x = I_0 + 2 sum_{k>=1} I_k
    double sum = 1.0;
    double p = 1.0;
    for (int k = 0; k < start; ++k) {
      p *= rho[k];
      sum += 2.0 * p;
      if (p < kEps * 1e-3 * sum) break;
    }
    log_i0 = x - std::log(sum);
  } else {
    // I_{1/2}(x) = sqrt(2/(pi x)) sinh x
    log_i0 = 0.5 * std::log(2.0 / (kPi * x)) + x + std::log(-std::expm1(-2.0 * x)) -
             std::log(2.0);
  }
  log_i_[0] = log_i0;
  for (int k = 1; k <= last; ++k) log_i_[k] = log_i_[k - 1] + std::log(rho[k - 1]);

  // Forward recurrence for s_k = K_{nu_k+1}/K_{nu_k}:  s_k = 1/s_{k-1} + 2 nu_k / x
  double log_k0 = 0.0;
  double s0 = 0.0;
  if (family == OrderFamily::Integer) {
    const KSeed seed = x <= 2.0 ? k01_series(x) : k01_continued_fraction(x);
    log_k0 = seed.log_k0;
    s0 = seed.ratio;
  } else {
    // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x},  K_{3/2} = K_{1/2} (1 + 1/x)
    log_k0 = 0.5 * std::log(kPi / (2.0 * x)) - x;
    s0 = 1.0 + 1.0 / x;
  }
  log_k_[0] = log_k0;
  k_ratio_[0] = s0;
  for (int k = 1; k <= last; ++k) {
    const double nu_k = base_ + k;
    k_ratio_[k] = 1.0 / k_ratio_[k - 1] + 2.0 * nu_k / x;
  }
  for (int k = 1; k <= last; ++k) log_k_[k] = log_k_[k - 1] + std::log(k_ratio_[k - 1]);
}

double BesselTable::k_lower_ratio(int k) const {
  if (k > 0) return 1.0 / k_ratio_[k - 1];
  // K_{-1} = K_1 for the integer family, K_{-1/2} = K_{1/2} for the half-integer one.
  return family_ == OrderFamily::Integer ? k_ratio_[0] : 1.0;
}

double BesselTable::log_i_prime(int k) const {
  return log_i_[k] + std::log(i_ratio_[k] + order(k) / x_);
}

double BesselTable::log_abs_k_prime(int k) const {
  return log_k_[k] + std::log(k_lower_ratio(k) + order(k) / x_);
}

double bessel_i_scaled(BesselOrder order, double x, int max_order) {
  const BesselTable t = table_for(order, x, max_order);
  const SignedLog v = reflected_i(t, order.index(), order);
  return v.sign * std::exp(v.log_abs - x);
}

double bessel_i(BesselOrder order, double x, int max_order) {
  const BesselTable t = table_for(order, x, max_order);
  const SignedLog v = reflected_i(t, order.index(), order);
  return v.sign * checked_exp(v.log_abs, "I_nu(x)");
}

double log_bessel_i(BesselOrder order, double x, int max_order) {
  const BesselTable t = table_for(order, x, max_order);
  const SignedLog v = reflected_i(t, order.index(), order);
  if (v.sign < 0.0) throw DomainError("I_nu(x) is negative; its logarithm is undefined");
  return v.log_abs;
}

double bessel_k_scaled(BesselOrder order, double x, int max_order) {
  const BesselTable t = table_for(order, x, max_order);
  return std::exp(t.log_k(order.index()) + x);
}

double bessel_k(BesselOrder order, double x, int max_order) {
  const BesselTable t = table_for(order, x, max_order);
  return checked_exp(t.log_k(order.index()), "K_nu(x)");
}

double log_bessel_k(BesselOrder order, double x, int max_order) {
  const BesselTable t = table_for(order, x, max_order);
  return t.log_k(order.index());
}

double bessel_i_prime(BesselOrder order, double x, int max_order) {
  const BesselTable t = table_for(order, x, max_order);
  const int k = order.index();
  const double ip = checked_exp(t.log_i_prime(k), "I'_nu(x)");
  if (!order.is_negative() || order.is_integer()) return ip;
  const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
  return ip - sgn * (2.0 / kPi) * checked_exp(t.log_abs_k_prime(k), "K'_nu(x)");
}

double bessel_k_prime(BesselOrder order, double x, int max_order) {
  const BesselTable t = table_for(order, x, max_order);
  return -checked_exp(t.log_abs_k_prime(order.index()), "K'_nu(x)");
}

double debye_eta(double y) {
  if (!(y > 0.0)) throw DomainError("debye_eta requires y > 0");
  const double s = std::sqrt(1.0 + y * y);
  return s + std::log(y / (1.0 + s));
}

double debye_u(double t) { return (3.0 * t - 5.0 * t * t * t) / 24.0; }

double debye_t(double alpha, double y) { return 1.0 / std::sqrt(1.0 + alpha * alpha * y * y); }

}  // namespace pfa::specfun
