#include "pfa/concentric_spheres.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "pfa/numerics.hpp"
#include "pfa/specfun.hpp"

namespace pfa {
namespace {

using specfun::BesselTable;
using specfun::OrderFamily;

constexpr int kMaxAngularMomentum = 1 << 15;

double log1m_exp(double log_f) { return std::log(-std::expm1(log_f)); }

// ln[(I + 2x I')_nu(x)] = ln I_nu + ln(2 nu + 1 + 2x I_{nu+1}/I_nu)
double log_tm_i(const BesselTable& t, int k) {
  const double nu = t.order(k);
  return t.log_i(k) + std::log(2.0 * nu + 1.0 + 2.0 * t.x() * t.i_ratio(k));
}

// ln|(K + 2x K')_nu(x)| = ln K_nu + ln(2 nu - 1 + 2x K_{nu-1}/K_nu)
double log_tm_k(const BesselTable& t, int k) {
  const double nu = t.order(k);
  return t.log_k(k) + std::log(2.0 * nu - 1.0 + 2.0 * t.x() * t.k_lower_ratio(k));
}

double log_factor_te(const BesselTable& inner, const BesselTable& outer, int k) {
  return inner.log_i(k) - outer.log_i(k) + outer.log_k(k) - inner.log_k(k);
}

double log_factor_tm(const BesselTable& inner, const BesselTable& outer, int k) {
  return log_tm_i(inner, k) - log_tm_i(outer, k) + log_tm_k(outer, k) - log_tm_k(inner, k);
}

void check_mode(int l, double alpha, double y) {
  if (l < 1 || l > kMaxAngularMomentum)
    throw DomainError("angular momentum l out of range: " + std::to_string(l));
  if (!(alpha > 1.0)) throw DomainError("mode factors require alpha > 1");
  if (!(y > 0.0)) throw DomainError("mode factors require y > 0");
}

int initial_mode_guess(double log_alpha, double rel_tol, int max_modes) {
  const double decades = -std::log(rel_tol) + 10.0;
  return static_cast<int>(std::min<double>(decades / (2.0 * log_alpha) + 16.0, max_modes));
}

}  // namespace

ConcentricSpheres::ConcentricSpheres(double alpha) : ConcentricSpheres(alpha, alpha - 1.0) {}

ConcentricSpheres::ConcentricSpheres(double alpha, double gap) : alpha_(alpha), gap_(gap) {
  if (!(alpha > 1.0) || !std::isfinite(alpha) || !(gap > 0.0))
    throw DomainError("concentric spheres require alpha = b/a > 1");
}

ConcentricSpheres ConcentricSpheres::from_gap(double alpha_minus_one) {
  return ConcentricSpheres(1.0 + alpha_minus_one, alpha_minus_one);
}

double mode_factor_te(int l, double alpha, double y) {
  check_mode(l, alpha, y);
  const BesselTable inner(OrderFamily::HalfInteger, y, l + 1);
  const BesselTable outer(OrderFamily::HalfInteger, alpha * y, l + 1);
  return std::exp(log_factor_te(inner, outer, l));
}

double mode_factor_tm(int l, double alpha, double y) {
  check_mode(l, alpha, y);
  const BesselTable inner(OrderFamily::HalfInteger, y, l + 1);
  const BesselTable outer(OrderFamily::HalfInteger, alpha * y, l + 1);
  return std::exp(log_factor_tm(inner, outer, l));
}

double cs_mode_sum(const ConcentricSpheres& cfg, ModeSector sector, double y,
                   const ModeSumOptions& options, int* modes_used) {
  if (!(y > 0.0)) throw DomainError("cs_mode_sum requires y > 0");
  const double alpha = cfg.alpha();
  const int ceiling = std::min(options.max_modes, kMaxAngularMomentum);
  int count = initial_mode_guess(std::log1p(cfg.gap()), options.rel_tol, ceiling);
  std::optional<BesselTable> inner;
  std::optional<BesselTable> outer;
  auto rebuild = [&](int n) {
    inner.emplace(OrderFamily::HalfInteger, y, n);
    outer.emplace(OrderFamily::HalfInteger, alpha * y, n);
  };
  rebuild(count);

  const bool want_te = sector != ModeSector::TM;
  const bool want_tm = sector != ModeSector::TE;
  auto term = [&](long l) -> double {
    if (l >= count) {
      count = std::min(2 * count, ceiling);
      rebuild(count);
    }
    const int k = static_cast<int>(l);
    double value = 0.0;
    if (want_te) value += log1m_exp(log_factor_te(*inner, *outer, k));
    if (want_tm) value += log1m_exp(log_factor_tm(*inner, *outer, k));
    return (l + 0.5) * value;
  };
  const numerics::SeriesResult sum =
      numerics::sum_until_converged(term, 0.1 * options.rel_tol, 3, 1, ceiling - 1);
  if (modes_used) *modes_used = static_cast<int>(sum.report.order_used);
  return sum.value;
}

EnergyValue casimir_cs_exact(const ConcentricSpheres& cfg, ModeSector sector,
                             const ModeSumOptions& options) {
  int max_modes_used = 0;
  auto integrand = [&](double y) {
    int used = 0;
    const double s = cs_mode_sum(cfg, sector, y, options, &used);
    max_modes_used = std::max(max_modes_used, used);
    return s;
  };
  numerics::QuadratureOptions q;
  q.initial_cutoff = 1.0 / cfg.gap();
  const numerics::QuadratureResult r =
      numerics::integrate_semi_infinite(integrand, options.rel_tol, q);
  const double value = r.value / kPi;
  return make_energy(value, r.abs_error / kPi + options.rel_tol * std::abs(value),
                     Truncation{max_modes_used, std::nullopt, r.cutoff});
}

EnergyValue casimir_cs_pfa(const ConcentricSpheres& cfg, PfaSurface surface, ModeSector sector) {
  const double eps = cfg.gap();
  const double inner = -kPi * kPi * kPi / (180.0 * eps * eps * eps);
  return make_energy(inner * pfa_area_factor(surface, cfg.alpha(), 2) * sector_share(sector));
}

EnergyValue casimir_cs_small_gap(const ConcentricSpheres& cfg) {
  const double pfa = casimir_cs_pfa(cfg, PfaSurface::Inner).value;
  return make_energy(pfa * (1.0 + cfg.gap()));
}

double cs_large_alpha_constant_te() {
  static const double value = [] {
    auto f = [](double x) {
      const BesselTable t(OrderFamily::HalfInteger, x, 2);
      return x * x * x * std::exp(t.log_k(1) - t.log_i(1));
    };
    numerics::QuadratureOptions q;
    q.initial_cutoff = 4.0;
    return numerics::integrate_semi_infinite(f, 1e-12, q).value / (kPi * kPi);
  }();
  return value;
}

double cs_large_alpha_constant_tm() {
  static const double value = [] {
    auto f = [](double x) {
      const BesselTable t(OrderFamily::HalfInteger, x, 2);
      return x * x * x * std::exp(log_tm_k(t, 1) - log_tm_i(t, 1));
    };
    numerics::QuadratureOptions q;
    q.initial_cutoff = 4.0;
    return 2.0 * numerics::integrate_semi_infinite(f, 1e-12, q).value / (kPi * kPi);
  }();
  return value;
}

EnergyValue casimir_cs_large_alpha(const ConcentricSpheres& cfg, ModeSector sector) {
  double c = 0.0;
  if (sector != ModeSector::TM) c += cs_large_alpha_constant_te();
  if (sector != ModeSector::TE) c += cs_large_alpha_constant_tm();
  const double a2 = cfg.alpha() * cfg.alpha();
  return make_energy(-c / (a2 * a2));
}

EnergyValue electro_cs_exact(const ConcentricSpheres& cfg) {
  return make_energy(2.0 * kPi * cfg.alpha() / cfg.gap());
}

EnergyValue electro_cs_pfa(const ConcentricSpheres& cfg, PfaSurface surface) {
  return make_energy(2.0 * kPi / cfg.gap() * pfa_area_factor(surface, cfg.alpha(), 2));
}

namespace uniform {

double delta_eta(double alpha, double y) {
  return specfun::debye_eta(alpha * y) - specfun::debye_eta(y);
}

double delta_eta_expansion(double alpha, double y) {
  const double eps = alpha - 1.0;
  const double s = std::sqrt(1.0 + y * y);
  return eps * s - eps * eps / (2.0 * s);
}

double k_ratio(double nu, double alpha, double y) {
  using specfun::debye_t;
  using specfun::debye_u;
  const double prefactor = std::pow((1.0 + y * y) / (1.0 + alpha * alpha * y * y), 0.25);
  const double correction =
      (1.0 - debye_u(debye_t(alpha, y)) / nu) / (1.0 - debye_u(debye_t(1.0, y)) / nu);
  return prefactor * correction * std::exp(-nu * delta_eta(alpha, y));
}

double i_ratio(double nu, double alpha, double y) {
  using specfun::debye_t;
  using specfun::debye_u;
  const double prefactor = std::pow((1.0 + alpha * alpha * y * y) / (1.0 + y * y), 0.25);
  const double correction =
      (1.0 + debye_u(debye_t(1.0, y)) / nu) / (1.0 + debye_u(debye_t(alpha, y)) / nu);
  return prefactor * correction * std::exp(-nu * delta_eta(alpha, y));
}

double mode_factor(double nu, double alpha, double y) {
  return std::exp(-2.0 * nu * delta_eta(alpha, y));
}

double l_sum_direct(int k, double delta_eta) {
  if (k < 1 || !(delta_eta > 0.0)) throw DomainError("l_sum_direct requires k >= 1, delta_eta > 0");
  auto term = [&](long l) {
    const double nu = l + 0.5;
    return nu * nu * std::exp(-2.0 * nu * k * delta_eta);
  };
  return numerics::sum_until_converged(term, 1e-15, 4, 1, 100'000'000).value;
}

double l_sum_leading(int k, double delta_eta) {
  const double kd = k * delta_eta;
  return 1.0 / (4.0 * kd * kd * kd);
}

double l_sum_expanded(int k, double alpha, double y) {
  const double eps = alpha - 1.0;
  const double s2 = 1.0 + y * y;
  const double s3 = s2 * std::sqrt(s2);
  const double k3 = static_cast<double>(k) * k * k;
  // (eps s - eps^2 / 2s)^{-3} = (eps s)^{-3} (1 + 3 eps / (2 s^2) + ...)
  return (1.0 + 1.5 * eps / s2) / (4.0 * k3 * eps * eps * eps * s3);
}

double small_gap_energy(double alpha) {
  // sum_k (1/k) l_sum_expanded(k) = zeta(4) l_sum_expanded(1)
  auto integrand = [&](double y) { return kZeta4 * l_sum_expanded(1, alpha, y); };
  const double integral = numerics::integrate_semi_infinite(integrand, 1e-12).value;
  return -(2.0 / kPi) * integral;
}

}  // namespace uniform

}  // namespace pfa
