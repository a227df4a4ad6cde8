#include "pfa/ratiofit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <type_traits>

#include <Eigen/Dense>

#include "pfa/concentric_cylinders.hpp"
#include "pfa/concentric_spheres.hpp"
#include "pfa/cylinder_plane.hpp"
#include "pfa/sphere_plane.hpp"

namespace pfa {
namespace {

// Columns of the design matrix; fixed-intercept models fit y - 1.
Eigen::VectorXd regressors(FitModel model, double x) {
  switch (model) {
    case FitModel::Linear: return Eigen::Vector<double, 1>(x);
    case FitModel::Quadratic: return Eigen::Vector2d(x, x * x);
    case FitModel::QuadLog: return Eigen::Vector2d(x, x * x * std::log(x));
    case FitModel::CubicLog: return Eigen::Vector3d(x, x * x * std::log(x), x * x * x);
    case FitModel::PowerLaw: return Eigen::Vector2d(1.0, -std::log(x));
    case FitModel::FixedQuartic: return Eigen::Vector<double, 1>(1.0 / (x * x * x * x));
    case FitModel::AffinePower: return Eigen::Vector2d(1.0, x);
  }
  throw FitError("unknown fit model");
}

bool needs_positive_x(FitModel model) {
  return model == FitModel::QuadLog || model == FitModel::CubicLog ||
         model == FitModel::PowerLaw || model == FitModel::FixedQuartic;
}

template <class T>
T rethrow_with_gap(const T& e, double gap) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "at gap " << gap << ": " << e.what();
  if constexpr (std::is_same_v<T, AccuracyError>) {
    return AccuracyError(msg.str(), e.best_estimate(), e.abs_error());
  } else {
    return T(msg.str());
  }
}

}  // namespace

RatioCurve::RatioCurve(std::vector<RatioSample> samples, Geometry geometry, ModeSector sector)
    : geometry_(geometry), sector_(sector) {
  samples_.reserve(samples.size());
  for (const RatioSample& s : samples) push_back(s);
}

void RatioCurve::push_back(const RatioSample& sample) {
  if (!std::isfinite(sample.x) || !std::isfinite(sample.y))
    throw DomainError("ratio samples must be finite");
  if (!samples_.empty() && !(sample.x > samples_.back().x))
    throw DomainError("ratio curve x values must be strictly increasing");
  samples_.push_back(sample);
}

std::string_view to_string(FitModel model) {
  switch (model) {
    case FitModel::Linear: return "linear";
    case FitModel::Quadratic: return "quad";
    case FitModel::QuadLog: return "quadlog";
    case FitModel::CubicLog: return "cubiclog";
    case FitModel::PowerLaw: return "power";
    case FitModel::FixedQuartic: return "quartic";
    case FitModel::AffinePower: return "affine";
  }
  return "?";
}

FitModel parse_model(std::string_view text) {
  for (FitModel m : {FitModel::Linear, FitModel::Quadratic, FitModel::QuadLog, FitModel::CubicLog,
                     FitModel::PowerLaw, FitModel::FixedQuartic, FitModel::AffinePower}) {
    if (text == to_string(m)) return m;
  }
  throw ConfigurationError("unknown fit model '" + std::string(text) + "'");
}

std::vector<std::string> coefficient_names(FitModel model) {
  switch (model) {
    case FitModel::Linear: return {"b"};
    case FitModel::Quadratic:
    case FitModel::QuadLog: return {"b", "c"};
    case FitModel::CubicLog: return {"b", "c", "d"};
    case FitModel::PowerLaw:
    case FitModel::AffinePower: return {"a", "b"};
    case FitModel::FixedQuartic: return {"a"};
  }
  return {};
}

bool has_fixed_intercept(FitModel model) {
  return model == FitModel::Linear || model == FitModel::Quadratic ||
         model == FitModel::QuadLog || model == FitModel::CubicLog;
}

bool FitWindow::contains(double x) const {
  const double slack = 1e-12 * std::max(std::abs(x_min), std::abs(x_max));
  return x >= x_min - slack && x <= x_max + slack;
}

double FitResult::coefficient(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return coefficients[i];
  throw FitError("fit has no coefficient named '" + std::string(name) + "'");
}

FitResult fit(const RatioCurve& curve, FitModel model, const FitWindow& window) {
  if (!(window.x_min <= window.x_max)) throw FitError("fit window has min > max");
  std::vector<RatioSample> used;
  for (const RatioSample& s : curve.samples())
    if (window.contains(s.x)) used.push_back(s);

  const std::vector<std::string> names = coefficient_names(model);
  const auto p = static_cast<Eigen::Index>(names.size());
  const auto n = static_cast<Eigen::Index>(used.size());
  if (n < p + 1) {
    throw FitError("fit '" + std::string(to_string(model)) + "' needs at least " +
                   std::to_string(p + 1) + " samples in the window, got " + std::to_string(n));
  }

  double sign = 1.0;
  if (model == FitModel::PowerLaw) {
    sign = used.front().y < 0.0 ? -1.0 : 1.0;
    for (const RatioSample& s : used)
      if (!(s.y * sign > 0.0)) throw FitError("power-law fit needs samples of one sign");
  }

  Eigen::MatrixXd design(n, p);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = used[i].x;
    if (needs_positive_x(model) && !(x > 0.0))
      throw FitError("fit '" + std::string(to_string(model)) + "' needs x > 0");
    design.row(i) = regressors(model, x).transpose();
    double y = used[i].y;
    if (has_fixed_intercept(model)) y -= 1.0;
    if (model == FitModel::PowerLaw) y = std::log(sign * y);
    rhs(i) = y;
  }

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < p) {
    // Name the columns the pivoting pushed past the numerical rank.
    std::string cols;
    for (Eigen::Index k = qr.rank(); k < p; ++k) {
      if (!cols.empty()) cols += ", ";
      cols += names[qr.colsPermutation().indices()(k)];
    }
    throw FitError("design matrix is rank deficient; collinear column(s): " + cols);
  }
  Eigen::VectorXd coef = qr.solve(rhs);

  FitResult result;
  result.model = model;
  result.names = names;
  result.window = window;
  result.samples_used = static_cast<std::size_t>(n);
  if (model == FitModel::PowerLaw) coef(0) = sign * std::exp(coef(0));
  result.coefficients.assign(coef.data(), coef.data() + coef.size());
  for (double c : result.coefficients)
    if (!std::isfinite(c)) throw FitError("fit produced non-finite coefficients");

  double ss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = used[i].y - evaluate(result, used[i].x);
    ss += r * r;
  }
  result.residual_rms = std::sqrt(ss / static_cast<double>(n));
  return result;
}

FitResult fit(const RatioCurve& curve, FitModel model) {
  if (curve.size() == 0) throw FitError("cannot fit an empty curve");
  return fit(curve, model, FitWindow{curve.samples().front().x, curve.samples().back().x});
}

double evaluate(const FitResult& result, double x) {
  const std::vector<double>& c = result.coefficients;
  switch (result.model) {
    case FitModel::Linear: return 1.0 + c[0] * x;
    case FitModel::Quadratic: return 1.0 + c[0] * x + c[1] * x * x;
    case FitModel::QuadLog: return 1.0 + c[0] * x + c[1] * x * x * std::log(x);
    case FitModel::CubicLog:
      return 1.0 + c[0] * x + c[1] * x * x * std::log(x) + c[2] * x * x * x;
    case FitModel::PowerLaw: return c[0] / std::pow(x, c[1]);
    case FitModel::FixedQuartic: return c[0] / (x * x * x * x);
    case FitModel::AffinePower: return c[0] + c[1] * x;
  }
  throw FitError("unknown fit model");
}

SweepPoint evaluate_point(const SweepSpec& spec, double gap) {
  SweepPoint pt;
  pt.gap = gap;
  const bool casimir = spec.interaction == Interaction::Casimir;
  ModeSumOptions mode_options;
  mode_options.rel_tol = spec.rel_tol;
  switch (spec.geometry) {
    case Geometry::ConcentricCylinders: {
      const auto cfg = ConcentricCylinders::from_gap(gap);
      pt.exact = casimir ? casimir_cc_exact(cfg, spec.sector, mode_options) : electro_cc_exact(cfg);
      pt.pfa = casimir ? casimir_cc_pfa(cfg, spec.surface, spec.sector)
                       : electro_cc_pfa(cfg, spec.surface);
      break;
    }
    case Geometry::ConcentricSpheres: {
      const auto cfg = ConcentricSpheres::from_gap(gap);
      pt.exact = casimir ? casimir_cs_exact(cfg, spec.sector, mode_options) : electro_cs_exact(cfg);
      pt.pfa = casimir ? casimir_cs_pfa(cfg, spec.surface, spec.sector)
                       : electro_cs_pfa(cfg, spec.surface);
      break;
    }
    case Geometry::CylinderPlane: {
      const CylinderPlane cfg(gap, spec.matrix_size);
      CylinderPlaneOptions options;
      options.rel_tol = spec.rel_tol;
      pt.exact = casimir ? casimir_cp_exact(cfg, spec.sector, options) : electro_cp_exact(cfg);
      pt.pfa = casimir ? casimir_cp_pfa(cfg, spec.sector) : electro_cp_pfa(cfg);
      break;
    }
    case Geometry::SpherePlane: {
      if (casimir)
        throw ConfigurationError("sphere-plane Casimir energies are only available as reference models");
      const SpherePlane cfg(gap);
      pt.exact = electro_sp_exact(cfg, spec.rel_tol);
      pt.pfa = electro_sp_pfa(cfg);
      pt.ratio = (pt.exact.value - electro_sp_constant()) / pt.pfa.value;
      pt.ratio_error = pt.exact.abs_error / std::abs(pt.pfa.value);
      return pt;
    }
  }
  pt.ratio = pt.exact.value / pt.pfa.value;
  pt.ratio_error = std::abs(pt.ratio) * pt.exact.abs_error / std::abs(pt.exact.value);
  return pt;
}

RatioCurve sweep(const SweepSpec& spec) {
  if (spec.grid.empty()) throw ConfigurationError("sweep grid is empty");
  RatioCurve curve({}, spec.geometry, spec.sector);
  for (double gap : spec.grid) {
    SweepPoint pt;
    try {
      pt = evaluate_point(spec, gap);
    } catch (const AccuracyError& e) {
      throw rethrow_with_gap(e, gap);
    } catch (const DomainError& e) {
      throw rethrow_with_gap(e, gap);
    } catch (const RangeError& e) {
      throw rethrow_with_gap(e, gap);
    } catch (const SingularityError& e) {
      throw rethrow_with_gap(e, gap);
    }
    curve.push_back(RatioSample{gap, pt.ratio, pt.ratio_error});
  }
  return curve;
}

std::vector<double> make_grid(double min, double max, int count, bool log_spacing) {
  if (count < 1) throw ConfigurationError("grid count must be at least 1");
  if (!std::isfinite(min) || !std::isfinite(max) || min > max)
    throw ConfigurationError("grid needs finite min <= max");
  if (count == 1) {
    if (min != max) throw ConfigurationError("a single-point grid needs min == max");
    return {min};
  }
  if (!(min < max)) throw ConfigurationError("grid with several points needs min < max");
  if (log_spacing && !(min > 0.0)) throw ConfigurationError("log grid needs min > 0");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    grid[i] = log_spacing ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                          : min + t * (max - min);
  }
  grid.front() = min;
  grid.back() = max;
  return grid;
}

}  // namespace pfa
