#include "pfa/concentric_cylinders.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "pfa/numerics.hpp"
#include "pfa/specfun.hpp"

namespace pfa {
namespace {

using specfun::BesselTable;
using specfun::OrderFamily;

// ln(1 - e^{log_f}) for log_f < 0
double log1m_exp(double log_f) { return std::log(-std::expm1(log_f)); }

int initial_mode_guess(double log_alpha, double rel_tol, int max_modes) {
  const double decades = -std::log(rel_tol) + 10.0;
  const double n = decades / (2.0 * log_alpha) + 16.0;
  return static_cast<int>(std::min<double>(n, max_modes));
}

}  // namespace

ConcentricCylinders::ConcentricCylinders(double alpha) : ConcentricCylinders(alpha, alpha - 1.0) {}

ConcentricCylinders::ConcentricCylinders(double alpha, double gap) : alpha_(alpha), gap_(gap) {
  if (!(alpha > 1.0) || !std::isfinite(alpha) || !(gap > 0.0))
    throw DomainError("concentric cylinders require alpha = b/a > 1");
}

ConcentricCylinders ConcentricCylinders::from_gap(double alpha_minus_one) {
  return ConcentricCylinders(1.0 + alpha_minus_one, alpha_minus_one);
}

double cc_mode_sum(const ConcentricCylinders& cfg, ModeSector sector, double beta,
                   const ModeSumOptions& options, int* modes_used) {
  if (!(beta > 0.0)) throw DomainError("cc_mode_sum requires beta > 0");
  const double alpha = cfg.alpha();
  int count = initial_mode_guess(std::log1p(cfg.gap()), options.rel_tol, options.max_modes);
  std::optional<BesselTable> inner;
  std::optional<BesselTable> outer;
  auto rebuild = [&](int n) {
    inner.emplace(OrderFamily::Integer, beta, n);
    outer.emplace(OrderFamily::Integer, alpha * beta, n);
  };
  rebuild(count);

  const bool want_tm = sector != ModeSector::TE;
  const bool want_te = sector != ModeSector::TM;
  auto term = [&](long n) -> double {
    if (n >= count) {
      if (count >= options.max_modes)
        throw AccuracyError("concentric-cylinder mode sum hit the mode ceiling", 0.0, 0.0);
      count = std::min(2 * count, options.max_modes);
      rebuild(count);
    }
    const int k = static_cast<int>(n);
    const BesselTable& a = *inner;
    const BesselTable& b = *outer;
    double value = 0.0;
    if (want_tm) {
      const double log_f = a.log_i(k) - b.log_i(k) + b.log_k(k) - a.log_k(k);
      value += log1m_exp(log_f);
    }
    if (want_te) {
      const double log_f =
          a.log_i_prime(k) - b.log_i_prime(k) + b.log_abs_k_prime(k) - a.log_abs_k_prime(k);
      value += log1m_exp(log_f);
    }
    return n == 0 ? value : 2.0 * value;
  };
  const numerics::SeriesResult sum =
      numerics::sum_until_converged(term, 0.1 * options.rel_tol, 3, 0, options.max_modes);
  if (modes_used) *modes_used = static_cast<int>(sum.report.order_used);
  return sum.value;
}

EnergyValue casimir_cc_exact(const ConcentricCylinders& cfg, ModeSector sector,
                             const ModeSumOptions& options) {
  int max_modes_used = 0;
  auto integrand = [&](double beta) {
    int used = 0;
    const double s = cc_mode_sum(cfg, sector, beta, options, &used);
    max_modes_used = std::max(max_modes_used, used);
    return beta * s;
  };
  numerics::QuadratureOptions q;
  q.initial_cutoff = 1.0 / cfg.gap();
  const numerics::QuadratureResult r =
      numerics::integrate_semi_infinite(integrand, options.rel_tol, q);
  const double scale = 1.0 / (4.0 * kPi);
  const double value = scale * r.value;
  return make_energy(value, scale * r.abs_error + options.rel_tol * std::abs(value),
                     Truncation{max_modes_used, std::nullopt, r.cutoff});
}

EnergyValue casimir_cc_pfa(const ConcentricCylinders& cfg, PfaSurface surface,
                           ModeSector sector) {
  const double eps = cfg.gap();
  const double inner = -kPi * kPi * kPi / (360.0 * eps * eps * eps);
  return make_energy(inner * pfa_area_factor(surface, cfg.alpha(), 1) * sector_share(sector));
}

EnergyValue casimir_cc_ntlo(const ConcentricCylinders& cfg) {
  const double eps = cfg.gap();
  const double pfa = casimir_cc_pfa(cfg, PfaSurface::Inner).value;
  return make_energy(pfa * (1.0 + 0.5 * eps - kCcNtloQuadratic * eps * eps));
}

EnergyValue casimir_cc_large_alpha(const ConcentricCylinders& cfg) {
  const double alpha = cfg.alpha();
  return make_energy(-1.26 / (8.0 * kPi * alpha * alpha * std::log1p(cfg.gap())));
}

EnergyValue electro_cc_exact(const ConcentricCylinders& cfg) {
  return make_energy(kPi / std::log1p(cfg.gap()));
}

EnergyValue electro_cc_pfa(const ConcentricCylinders& cfg, PfaSurface surface) {
  return make_energy(kPi / cfg.gap() * pfa_area_factor(surface, cfg.alpha(), 1));
}

}  // namespace pfa
