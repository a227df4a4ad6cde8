#pragma once

#include <vector>

namespace pfa::specfun {

inline constexpr int kDefaultMaxOrder = 256;

/// Order nu = twice_nu / 2; covers integer orders n and half-integer orders l + 1/2.
class BesselOrder {
 public:
  static constexpr BesselOrder integer(int n) { return BesselOrder(2 * n); }
  /// nu = l + 1/2
  static constexpr BesselOrder half_integer(int l) { return BesselOrder(2 * l + 1); }
  static constexpr BesselOrder from_twice(int twice_nu) { return BesselOrder(twice_nu); }

  constexpr int twice_nu() const noexcept { return twice_nu_; }
  constexpr double value() const noexcept { return 0.5 * twice_nu_; }
  constexpr bool is_integer() const noexcept { return twice_nu_ % 2 == 0; }
  constexpr bool is_negative() const noexcept { return twice_nu_ < 0; }
  constexpr BesselOrder magnitude() const noexcept {
    return BesselOrder(twice_nu_ < 0 ? -twice_nu_ : twice_nu_);
  }
  /// Position of |nu| in its family: n for integers, l for l + 1/2.
  constexpr int index() const noexcept {
    const int t = twice_nu_ < 0 ? -twice_nu_ : twice_nu_;
    return t / 2;
  }

  friend constexpr bool operator==(BesselOrder, BesselOrder) = default;

 private:
  constexpr explicit BesselOrder(int twice_nu) : twice_nu_(twice_nu) {}
  int twice_nu_;
};

enum class OrderFamily { Integer, HalfInteger };

/// Modified Bessel functions I and K of every order nu_k = base + k, k = 0..count-1,
/// at a single argument x > 0, stored in logarithmic form so that neither
/// overflow nor underflow occurs for large orders or small arguments.
///
/// I is obtained from the continued-fraction ratios I_{nu+1}/I_nu (backward
/// Miller recurrence) and normalised by e^x = I_0 + 2 sum I_k (integer family)
/// or by the closed form of I_{1/2} (half-integer family). K is seeded with
/// K_0, K_1 (Temme series for x <= 2, Steed continued fraction above) or the
/// closed form of K_{1/2}, K_{3/2}, and carried upward by forward recurrence.
class BesselTable {
 public:
  BesselTable(OrderFamily family, double x, int count);

  OrderFamily family() const noexcept { return family_; }
  double x() const noexcept { return x_; }
  int size() const noexcept { return count_; }
  double order(int k) const noexcept { return base_ + k; }

  double log_i(int k) const { return log_i_[k]; }
  double log_k(int k) const { return log_k_[k]; }
  /// I_{nu_k + 1} / I_{nu_k}
  double i_ratio(int k) const { return i_ratio_[k]; }
  /// K_{nu_k + 1} / K_{nu_k}
  double k_ratio(int k) const { return k_ratio_[k]; }
  /// K_{nu_k - 1} / K_{nu_k}, using K_{-nu} = K_nu below the base order.
  double k_lower_ratio(int k) const;

  /// ln I'_nu, with I'_nu = I_{nu+1} + (nu/x) I_nu.
  double log_i_prime(int k) const;
  /// ln |K'_nu|, with K'_nu = -(K_{nu-1} + (nu/x) K_nu).
  double log_abs_k_prime(int k) const;

 private:
  OrderFamily family_;
  double x_;
  int count_;
  double base_;
  std::vector<double> log_i_;
  std::vector<double> log_k_;
  std::vector<double> i_ratio_;
  std::vector<double> k_ratio_;
};

// Single-order accessors. All require x > 0 and |nu| <= max_order.
// *_scaled return I_nu(x) e^{-x} and K_nu(x) e^{x}.

double bessel_i(BesselOrder order, double x, int max_order = kDefaultMaxOrder);
double bessel_i_scaled(BesselOrder order, double x, int max_order = kDefaultMaxOrder);
/// Requires I_nu(x) > 0 (always true except for some negative half-integer orders).
double log_bessel_i(BesselOrder order, double x, int max_order = kDefaultMaxOrder);

double bessel_k(BesselOrder order, double x, int max_order = kDefaultMaxOrder);
double bessel_k_scaled(BesselOrder order, double x, int max_order = kDefaultMaxOrder);
double log_bessel_k(BesselOrder order, double x, int max_order = kDefaultMaxOrder);

double bessel_i_prime(BesselOrder order, double x, int max_order = kDefaultMaxOrder);
double bessel_k_prime(BesselOrder order, double x, int max_order = kDefaultMaxOrder);

// Helpers of the uniform (Debye) large-order expansion.

/// eta(y) = sqrt(1 + y^2) + ln(y / (1 + sqrt(1 + y^2))), y > 0.
double debye_eta(double y);
/// u(t) = (3t - 5t^3) / 24
double debye_u(double t);
/// t_alpha(y) = 1 / sqrt(1 + alpha^2 y^2)
double debye_t(double alpha, double y);

}  // namespace pfa::specfun
