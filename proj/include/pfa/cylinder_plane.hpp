#pragma once

#include <Eigen/Dense>

#include "pfa/core.hpp"

namespace pfa {

/// Cylinder of radius a parallel to a plane at closest distance d. The
/// multipole index n runs over [-(N-1)/2, (N-1)/2] for matrix size N.
/// Energies are per unit length, reported as E a^2 / L.
class CylinderPlane {
 public:
  explicit CylinderPlane(double d_over_a, int matrix_size = 101);

  double d_over_a() const noexcept { return d_over_a_; }
  int matrix_size() const noexcept { return matrix_size_; }
  int max_index() const noexcept { return (matrix_size_ - 1) / 2; }
  /// Axis-to-plane distance over the radius, H/a = 1 + d/a.
  double h_over_a() const noexcept { return 1.0 + d_over_a_; }

  CylinderPlane with_matrix_size(int n) const { return CylinderPlane(d_over_a_, n); }

 private:
  double d_over_a_;
  int matrix_size_;
};

/// A^TE_{n,p} = -(I'_n(beta)/K'_n(beta)) K_{n+p}(2 beta H/a)
/// A^TM_{n,p} =  (I_n(beta)/K_n(beta))   K_{n+p}(2 beta H/a)
double matrix_element(ModeSector sector, int n, int p, double beta, const CylinderPlane& cfg);

/// Truncated kernel for one sector in the symmetric form
/// sqrt(D_n D_p) K_{n+p}(2 beta H/a), similar to A = D K and so with the same
/// determinant. Row/column i corresponds to n = i - (N-1)/2.
Eigen::MatrixXd cp_kernel(ModeSector sector, double beta, const CylinderPlane& cfg);

/// ln det(I - A^TE) + ln det(I - A^TM), restricted to `sector`.
double cp_log_det(ModeSector sector, double beta, const CylinderPlane& cfg);

struct CylinderPlaneOptions {
  double rel_tol = kDefaultRelTol;
  /// Grow N from `initial_matrix_size` (N -> 2N - 1) until the energy changes by
  /// less than rel_tol; otherwise the configured matrix size is used as is.
  bool auto_escalate = false;
  int initial_matrix_size = 21;
  int max_matrix_size = 201;
};

/// (1/4pi) int_0^inf beta [ln det(I - A^TE) + ln det(I - A^TM)] dbeta, restricted to `sector`.
EnergyValue casimir_cp_exact(const CylinderPlane& cfg, ModeSector sector,
                             const CylinderPlaneOptions& options = {});

/// 3 zeta(4) / (32 sqrt 2)
inline constexpr double kCpPfaConstant = 3.0 * kZeta4 / (32.0 * 1.4142135623730951);
inline constexpr double kCpNtloTM = 0.1944;
inline constexpr double kCpNtloTE = -1.1565;

/// -(1/2pi) (a/d)^{5/2} 3 zeta(4) / (32 sqrt 2) per sector; Both is twice that.
EnergyValue casimir_cp_pfa(const CylinderPlane& cfg, ModeSector sector);
/// PFA times (1 + c d/a) with c = 0.1944 (TM), -1.1565 (TE); Both adds the two.
EnergyValue casimir_cp_asymptotic(const CylinderPlane& cfg, ModeSector sector);

/// pi / arccosh(1 + d/a)
EnergyValue electro_cp_exact(const CylinderPlane& cfg);
/// (pi / sqrt 2) sqrt(a/d)
EnergyValue electro_cp_pfa(const CylinderPlane& cfg);
/// 1 + d/(12 a)
double electro_cp_ratio_ntlo(const CylinderPlane& cfg);

}  // namespace pfa
