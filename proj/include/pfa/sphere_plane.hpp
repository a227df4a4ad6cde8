#pragma once

#include "pfa/core.hpp"

namespace pfa {

/// Sphere of radius a at closest distance d from a plane; cosh(beta) = 1 + d/a.
/// Electrostatic energies are reported as U / (eps0 V^2 a).
class SpherePlane {
 public:
  explicit SpherePlane(double d_over_a);

  double d_over_a() const noexcept { return d_over_a_; }
  double beta() const noexcept { return beta_; }

 private:
  double d_over_a_;
  double beta_;
};

/// sum_{n>=1} 1/sinh(n beta), summed directly until the next term is below rel_tol.
double electro_sp_sum_direct(double beta, double rel_tol = kDefaultRelTol);

/// 2 pi sinh(beta) sum_{n>=1} 1/sinh(n beta)
EnergyValue electro_sp_exact(const SpherePlane& cfg, double rel_tol = kDefaultRelTol);

/// Small-beta form of the series, (gamma + ln coth(beta/2)) / beta.
double electro_sp_sum_asymptotic(double beta);

/// -pi ln(2 d/a); only defined for d/a < 1/2.
EnergyValue electro_sp_pfa(const SpherePlane& cfg);

/// Constant dropped from the small-gap expansion of the exact energy, 2 pi (gamma + ln 2).
double electro_sp_constant();

/// (exact - electro_sp_constant()) / PFA, which tends to 1 as d/a -> 0.
double electro_sp_ratio(const SpherePlane& cfg, double rel_tol = kDefaultRelTol);

enum class SpherePlaneModel { EM, ScalarDirichlet, ScalarNeumann };

/// Reference ratio-to-PFA models quoted from the literature, linear in d/a:
/// EM 1 - 1.4 x, Dirichlet 1 + x/3, Neumann 1 + (1/3 - 10/pi^2) x.
double casimir_sp_ratio_model(const SpherePlane& cfg, SpherePlaneModel model);
double casimir_sp_model_slope(SpherePlaneModel model);

}  // namespace pfa
