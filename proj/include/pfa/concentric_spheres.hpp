#pragma once

#include "pfa/concentric_cylinders.hpp"
#include "pfa/core.hpp"

namespace pfa {

/// Two concentric spherical shells of radii a < b; alpha = b/a. Casimir energies
/// are reported as E a, electrostatic ones as U / (eps0 V^2 a).
class ConcentricSpheres {
 public:
  explicit ConcentricSpheres(double alpha);
  static ConcentricSpheres from_gap(double alpha_minus_one);

  double alpha() const noexcept { return alpha_; }
  double gap() const noexcept { return gap_; }

 private:
  ConcentricSpheres(double alpha, double gap);
  double alpha_;
  double gap_;
};

/// F^TE_nu = I_nu(y) K_nu(alpha y) / (I_nu(alpha y) K_nu(y)), nu = l + 1/2.
double mode_factor_te(int l, double alpha, double y);
/// F^TM_nu with each Bessel function f replaced by f + 2 x f'(x).
double mode_factor_tm(int l, double alpha, double y);

/// sum_{l>=1} nu ln(1 - F_nu) at fixed y for the requested sector.
double cs_mode_sum(const ConcentricSpheres& cfg, ModeSector sector, double y,
                   const ModeSumOptions& options = {}, int* modes_used = nullptr);

/// (1/pi) sum_{l>=1} nu int_0^inf ln[(1 - F^TE)(1 - F^TM)] dy, restricted to `sector`.
EnergyValue casimir_cs_exact(const ConcentricSpheres& cfg, ModeSector sector,
                             const ModeSumOptions& options = {});

/// -pi^3 / (180 (alpha-1)^3) times the area factor (alpha^2 outer, alpha geometric mean).
EnergyValue casimir_cs_pfa(const ConcentricSpheres& cfg, PfaSurface surface,
                           ModeSector sector = ModeSector::Both);

/// PFA (inner) times 1 + (alpha - 1).
EnergyValue casimir_cs_small_gap(const ConcentricSpheres& cfg);

/// (1/pi^2) int_0^inf x^3 K_{3/2}(x) / I_{3/2}(x) dx
double cs_large_alpha_constant_te();
/// (2/pi^2) int_0^inf x^3 |K + 2x K'|_{3/2}(x) / (I + 2x I')_{3/2}(x) dx
double cs_large_alpha_constant_tm();

/// -C_sector / alpha^4 from the l = 1 mode at leading order in 1/alpha.
EnergyValue casimir_cs_large_alpha(const ConcentricSpheres& cfg, ModeSector sector);

/// 2 pi alpha / (alpha - 1)
EnergyValue electro_cs_exact(const ConcentricSpheres& cfg);
/// 2 pi / (alpha - 1) times the area factor of `surface`.
EnergyValue electro_cs_pfa(const ConcentricSpheres& cfg, PfaSurface surface);

/// Steps of the small-gap derivation through the uniform large-order expansion.
/// Kept apart from the exact evaluator so the two can be cross-checked.
namespace uniform {

/// eta(alpha y) - eta(y)
double delta_eta(double alpha, double y);
/// (alpha-1) sqrt(1+y^2) - (alpha-1)^2 / (2 sqrt(1+y^2))
double delta_eta_expansion(double alpha, double y);

/// Leading uniform approximation of K_nu(nu alpha y) / K_nu(nu y).
double k_ratio(double nu, double alpha, double y);
/// Leading uniform approximation of I_nu(nu y) / I_nu(nu alpha y).
double i_ratio(double nu, double alpha, double y);

/// e^{-2 nu Delta eta(y)}: common small-gap limit of F^TE and F^TM at y -> nu y.
double mode_factor(double nu, double alpha, double y);

/// sum_{l>=1} nu^2 e^{-2 nu k delta_eta}, summed directly.
double l_sum_direct(int k, double delta_eta);
/// 1 / (4 k^3 delta_eta^3)
double l_sum_leading(int k, double delta_eta);
/// l_sum_leading with Delta eta expanded to first order in alpha - 1.
double l_sum_expanded(int k, double alpha, double y);

/// -(2/pi) int dy sum_k (1/k) l_sum_expanded(k, alpha, y), with the k-sum done in
/// closed form (zeta(4)) and the y-integral by quadrature.
double small_gap_energy(double alpha);

}  // namespace uniform

}  // namespace pfa
