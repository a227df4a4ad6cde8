#pragma once

#include "pfa/core.hpp"

namespace pfa {

/// Two coaxial cylinders of radii a < b; alpha = b/a. Energies are per unit length,
/// reported as E a^2 / L (Casimir) and U / (eps0 V^2 L) (electrostatic).
class ConcentricCylinders {
 public:
  explicit ConcentricCylinders(double alpha);
  static ConcentricCylinders from_gap(double alpha_minus_one);

  double alpha() const noexcept { return alpha_; }
  double gap() const noexcept { return gap_; }

 private:
  ConcentricCylinders(double alpha, double gap);
  double alpha_;
  double gap_;  // alpha - 1, kept separately to avoid cancellation
};

struct ModeSumOptions {
  double rel_tol = kDefaultRelTol;
  /// Ceiling on the angular-momentum cutoff of the mode sums.
  int max_modes = 16384;
};

/// Sum over angular momenta n of ln(1 - F_n) at fixed imaginary wavenumber beta,
/// n = 0 counted once and |n| >= 1 twice. `modes_used` receives the cutoff reached.
double cc_mode_sum(const ConcentricCylinders& cfg, ModeSector sector, double beta,
                   const ModeSumOptions& options = {}, int* modes_used = nullptr);

/// (1/4pi) int_0^inf beta sum_n ln[(1 - F_n^TM)(1 - F_n^TE)] dbeta, restricted to `sector`.
EnergyValue casimir_cc_exact(const ConcentricCylinders& cfg, ModeSector sector,
                             const ModeSumOptions& options = {});

/// -pi^3 / (360 (alpha-1)^3) times the area factor of `surface`; a single sector carries half.
EnergyValue casimir_cc_pfa(const ConcentricCylinders& cfg, PfaSurface surface,
                           ModeSector sector = ModeSector::Both);

/// PFA (inner) times 1 + (alpha-1)/2 - (1/10 + 2/pi^2)(alpha-1)^2.
EnergyValue casimir_cc_ntlo(const ConcentricCylinders& cfg);

inline constexpr double kCcNtloQuadratic = 0.1 + 2.0 / (kPi * kPi);

/// -1.26 / (8 pi alpha^2 ln alpha)
EnergyValue casimir_cc_large_alpha(const ConcentricCylinders& cfg);

/// pi / ln(alpha)
EnergyValue electro_cc_exact(const ConcentricCylinders& cfg);
/// pi / (alpha - 1) times the area factor of `surface`.
EnergyValue electro_cc_pfa(const ConcentricCylinders& cfg, PfaSurface surface);

}  // namespace pfa
