#include "pfa/cylinder_plane.hpp"

#include <cmath>
#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "pfa/numerics.hpp"
#include "pfa/specfun.hpp"

namespace pfa {
namespace {

using specfun::BesselTable;
using specfun::OrderFamily;

// ln of the n-dependent prefactor of A_{n,p}; symmetric in n.
double log_prefactor(ModeSector sector, const BesselTable& t, int n) {
  const int k = std::abs(n);
  if (sector == ModeSector::TM) return t.log_i(k) - t.log_k(k);
  return t.log_i_prime(k) - t.log_abs_k_prime(k);
}

void require_single_sector(ModeSector sector) {
  if (sector == ModeSector::Both)
    throw DomainError("matrix elements are defined per sector (TE or TM)");
}

void require_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw DomainError("cylinder-plane kernel requires beta > 0");
}

}  // namespace

CylinderPlane::CylinderPlane(double d_over_a, int matrix_size)
    : d_over_a_(d_over_a), matrix_size_(matrix_size) {
  if (!(d_over_a > 0.0) || !std::isfinite(d_over_a))
    throw DomainError("cylinder-plane requires d/a > 0");
  if (matrix_size < 1 || matrix_size % 2 == 0)
    throw DomainError("matrix size must be a positive odd integer, got " +
                      std::to_string(matrix_size));
}

double matrix_element(ModeSector sector, int n, int p, double beta, const CylinderPlane& cfg) {
  require_single_sector(sector);
  require_beta(beta);
  const int m = std::abs(n + p);
  const BesselTable at_beta(OrderFamily::Integer, beta, std::abs(n) + 1);
  const BesselTable at_image(OrderFamily::Integer, 2.0 * beta * cfg.h_over_a(), m + 1);
  const double log_a = log_prefactor(sector, at_beta, n) + at_image.log_k(m);
  if (log_a > std::log(std::numeric_limits<double>::max()))
    throw RangeError("cylinder-plane matrix element overflows");
  return std::exp(log_a);
}

Eigen::MatrixXd cp_kernel(ModeSector sector, double beta, const CylinderPlane& cfg) {
  require_single_sector(sector);
  require_beta(beta);
  const int half = cfg.max_index();
  const int size = cfg.matrix_size();
  const BesselTable at_beta(OrderFamily::Integer, beta, half + 1);
  const BesselTable at_image(OrderFamily::Integer, 2.0 * beta * cfg.h_over_a(), 2 * half + 1);

  Eigen::VectorXd prefactor(half + 1);
  for (int n = 0; n <= half; ++n) prefactor(n) = log_prefactor(sector, at_beta, n);

  // D^{1/2} K D^{1/2} instead of D K: same spectrum, bounded entries at small beta
  Eigen::MatrixXd a(size, size);
  for (int i = 0; i < size; ++i) {
    const int n = i - half;
    for (int j = 0; j < size; ++j) {
      const int p = j - half;
      const double log_d = 0.5 * (prefactor(std::abs(n)) + prefactor(std::abs(p)));
      a(i, j) = std::exp(log_d + at_image.log_k(std::abs(n + p)));
    }
  }
  if (!a.allFinite()) throw RangeError("cylinder-plane kernel overflows");
  return a;
}

double cp_log_det(ModeSector sector, double beta, const CylinderPlane& cfg) {
  require_beta(beta);
  const int half = cfg.max_index();
  const int size = cfg.matrix_size();
  // Bessel evaluations are shared between the two sectors.
  const BesselTable at_beta(OrderFamily::Integer, beta, half + 1);
  const BesselTable at_image(OrderFamily::Integer, 2.0 * beta * cfg.h_over_a(), 2 * half + 1);

  auto sector_log_det = [&](ModeSector s) {
    Eigen::VectorXd half_log_d(half + 1);
    for (int n = 0; n <= half; ++n) half_log_d(n) = 0.5 * log_prefactor(s, at_beta, n);
    Eigen::MatrixXd m(size, size);
    for (int i = 0; i < size; ++i) {
      const int n = i - half;
      for (int j = 0; j < size; ++j) {
        const int p = j - half;
        const double log_a =
            half_log_d(std::abs(n)) + half_log_d(std::abs(p)) + at_image.log_k(std::abs(n + p));
        m(i, j) = (i == j ? 1.0 : 0.0) - std::exp(log_a);
      }
    }
    if (!m.allFinite()) throw RangeError("cylinder-plane kernel overflows");
    return numerics::log_det_positive(m);
  };

  double total = 0.0;
  if (sector != ModeSector::TM) total += sector_log_det(ModeSector::TE);
  if (sector != ModeSector::TE) total += sector_log_det(ModeSector::TM);
  return total;
}

namespace {

EnergyValue cp_energy_fixed(const CylinderPlane& cfg, ModeSector sector, double rel_tol) {
  auto integrand = [&](double beta) { return beta * cp_log_det(sector, beta, cfg); };
  numerics::QuadratureOptions q;
  q.initial_cutoff = 1.0 / cfg.d_over_a();
  const numerics::QuadratureResult r = numerics::integrate_semi_infinite(integrand, rel_tol, q);
  const double scale = 1.0 / (4.0 * kPi);
  return make_energy(scale * r.value, scale * r.abs_error,
                     Truncation{cfg.max_index(), cfg.matrix_size(), r.cutoff});
}

}  // namespace

EnergyValue casimir_cp_exact(const CylinderPlane& cfg, ModeSector sector,
                             const CylinderPlaneOptions& options) {
  if (!options.auto_escalate) return cp_energy_fixed(cfg, sector, options.rel_tol);

  int n = options.initial_matrix_size;
  EnergyValue previous = cp_energy_fixed(cfg.with_matrix_size(n), sector, options.rel_tol);
  while (true) {
    if (n >= options.max_matrix_size) {
      throw AccuracyError("cylinder-plane energy not converged at matrix size " +
                              std::to_string(n),
                          previous.value, previous.abs_error);
    }
    n = std::min(2 * n - 1, options.max_matrix_size);
    if (n % 2 == 0) --n;
    EnergyValue current = cp_energy_fixed(cfg.with_matrix_size(n), sector, options.rel_tol);
    const double change = std::abs(current.value - previous.value);
    if (change <= options.rel_tol * std::abs(current.value)) {
      current.abs_error += change;
      return current;
    }
    previous = current;
  }
}

EnergyValue casimir_cp_pfa(const CylinderPlane& cfg, ModeSector sector) {
  const double per_sector = -std::pow(cfg.d_over_a(), -2.5) * kCpPfaConstant / (2.0 * kPi);
  return make_energy(sector == ModeSector::Both ? 2.0 * per_sector : per_sector);
}

EnergyValue casimir_cp_asymptotic(const CylinderPlane& cfg, ModeSector sector) {
  const double per_sector = casimir_cp_pfa(cfg, ModeSector::TM).value;
  const double x = cfg.d_over_a();
  double value = 0.0;
  if (sector != ModeSector::TE) value += per_sector * (1.0 + kCpNtloTM * x);
  if (sector != ModeSector::TM) value += per_sector * (1.0 + kCpNtloTE * x);
  return make_energy(value);
}

EnergyValue electro_cp_exact(const CylinderPlane& cfg) {
  // arccosh(1 + x) = log1p(x + sqrt(x (2 + x))), accurate for small x
  const double x = cfg.d_over_a();
  return make_energy(kPi / std::log1p(x + std::sqrt(x * (2.0 + x))));
}

EnergyValue electro_cp_pfa(const CylinderPlane& cfg) {
  return make_energy(kPi / std::sqrt(2.0) * std::sqrt(1.0 / cfg.d_over_a()));
}

double electro_cp_ratio_ntlo(const CylinderPlane& cfg) { return 1.0 + cfg.d_over_a() / 12.0; }

}  // namespace pfa
