#include "pfa/sphere_plane.hpp"

#include <cmath>
#include <string>

#include "pfa/numerics.hpp"

namespace pfa {
namespace {

constexpr long kMaxSeriesTerms = 1'000'000;

}  // namespace

SpherePlane::SpherePlane(double d_over_a) : d_over_a_(d_over_a) {
  if (!(d_over_a > 0.0) || !std::isfinite(d_over_a))
    throw DomainError("sphere-plane requires d/a > 0");
  beta_ = std::log1p(d_over_a + std::sqrt(d_over_a * (2.0 + d_over_a)));
}

double electro_sp_sum_direct(double beta, double rel_tol) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("series requires beta > 0");
  // 1/sinh(n beta) = 2 e^{-n beta} / (1 - e^{-2 n beta})
  auto term = [beta](long n) {
    const double nb = static_cast<double>(n) * beta;
    return 2.0 * std::exp(-nb) / -std::expm1(-2.0 * nb);
  };
  try {
    return numerics::sum_until_converged(term, rel_tol, 1, 1, kMaxSeriesTerms).value;
  } catch (const AccuracyError& e) {
    throw AccuracyError("sphere-plane series needs more than " + std::to_string(kMaxSeriesTerms) +
                            " terms; use the small-beta form",
                        e.best_estimate(), e.abs_error());
  }
}

EnergyValue electro_sp_exact(const SpherePlane& cfg, double rel_tol) {
  const double s = electro_sp_sum_direct(cfg.beta(), rel_tol);
  const double value = 2.0 * kPi * std::sinh(cfg.beta()) * s;
  return make_energy(value, rel_tol * value);
}

double electro_sp_sum_asymptotic(double beta) {
  if (!(beta > 0.0)) throw DomainError("series requires beta > 0");
  constexpr double gamma = 0.5772156649;
  return (gamma + std::log(1.0 / std::tanh(0.5 * beta))) / beta;
}

EnergyValue electro_sp_pfa(const SpherePlane& cfg) {
  if (!(cfg.d_over_a() < 0.5))
    throw DomainError("sphere-plane PFA needs d/a < 1/2, got " + std::to_string(cfg.d_over_a()));
  return make_energy(-kPi * std::log(2.0 * cfg.d_over_a()));
}

double electro_sp_constant() { return 2.0 * kPi * (kEulerGamma + std::log(2.0)); }

double electro_sp_ratio(const SpherePlane& cfg, double rel_tol) {
  const double pfa = electro_sp_pfa(cfg).value;
  return (electro_sp_exact(cfg, rel_tol).value - electro_sp_constant()) / pfa;
}

double casimir_sp_model_slope(SpherePlaneModel model) {
  switch (model) {
    case SpherePlaneModel::EM: return -1.4;
    case SpherePlaneModel::ScalarDirichlet: return 1.0 / 3.0;
    case SpherePlaneModel::ScalarNeumann: return 1.0 / 3.0 - 10.0 / (kPi * kPi);
  }
  throw DomainError("unknown sphere-plane model");
}

double casimir_sp_ratio_model(const SpherePlane& cfg, SpherePlaneModel model) {
  return 1.0 + casimir_sp_model_slope(model) * cfg.d_over_a();
}

}  // namespace pfa
