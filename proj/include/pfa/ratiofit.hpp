#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfa/core.hpp"

namespace pfa {

struct RatioSample {
  double x = 0.0;
  double y = 0.0;
  std::optional<double> y_err;
};

/// Samples of a ratio (or energy) against a gap parameter, x strictly increasing.
class RatioCurve {
 public:
  RatioCurve() = default;
  RatioCurve(std::vector<RatioSample> samples, Geometry geometry = Geometry::ConcentricCylinders,
             ModeSector sector = ModeSector::Both);

  const std::vector<RatioSample>& samples() const noexcept { return samples_; }
  Geometry geometry() const noexcept { return geometry_; }
  ModeSector sector() const noexcept { return sector_; }
  std::size_t size() const noexcept { return samples_.size(); }

  /// Appends a sample; x must exceed the last one.
  void push_back(const RatioSample& sample);

 private:
  std::vector<RatioSample> samples_;
  Geometry geometry_ = Geometry::ConcentricCylinders;
  ModeSector sector_ = ModeSector::Both;
};

/// Linear   1 + b x
/// Quadratic 1 + b x + c x^2
/// QuadLog  1 + b x + c x^2 ln x
/// CubicLog 1 + b x + c x^2 ln x + d x^3
/// PowerLaw a / x^b (fitted as ln|y| = ln|a| - b ln x)
/// FixedQuartic a / x^4
/// AffinePower a + b x
enum class FitModel { Linear, Quadratic, QuadLog, CubicLog, PowerLaw, FixedQuartic, AffinePower };

std::string_view to_string(FitModel model);
/// Accepts linear, quad, quadlog, cubiclog, power, quartic, affine.
FitModel parse_model(std::string_view text);
std::vector<std::string> coefficient_names(FitModel model);
/// True for the models whose value at x -> 0 is pinned to 1.
bool has_fixed_intercept(FitModel model);

struct FitWindow {
  double x_min = 0.0;
  double x_max = 0.0;
  bool contains(double x) const;
};

struct FitResult {
  FitModel model = FitModel::Linear;
  std::vector<double> coefficients;
  std::vector<std::string> names;
  double residual_rms = 0.0;
  FitWindow window;
  std::size_t samples_used = 0;

  double coefficient(std::string_view name) const;
};

/// Unweighted least squares of `model` on the samples inside `window`, solved by
/// column-pivoted Householder QR. y_err is ignored.
FitResult fit(const RatioCurve& curve, FitModel model, const FitWindow& window);
/// Fit over every sample of the curve.
FitResult fit(const RatioCurve& curve, FitModel model);

/// Value of the fitted model at x.
double evaluate(const FitResult& result, double x);

/// Which physical quantity a sweep evaluates at each grid point.
struct SweepSpec {
  Geometry geometry = Geometry::ConcentricCylinders;
  Interaction interaction = Interaction::Casimir;
  ModeSector sector = ModeSector::Both;
  PfaSurface surface = PfaSurface::Inner;
  std::vector<double> grid;
  double rel_tol = kDefaultRelTol;
  /// Cylinder-plane only.
  int matrix_size = 101;
};

struct SweepPoint {
  double gap = 0.0;
  EnergyValue exact;
  EnergyValue pfa;
  /// exact/PFA; for sphere-plane electrostatics the constant 2 pi (gamma + ln 2) is
  /// removed from the exact energy first.
  double ratio = 0.0;
  double ratio_error = 0.0;
};

/// Exact and PFA evaluation at one gap value (alpha - 1 or d/a, by geometry).
SweepPoint evaluate_point(const SweepSpec& spec, double gap);

/// One evaluate_point per grid value. A failing point is rethrown with its gap value
/// in the message, keeping the original exception type.
RatioCurve sweep(const SweepSpec& spec);

/// min, max, count points, linear or logarithmic spacing; the end points are exact.
std::vector<double> make_grid(double min, double max, int count, bool log_spacing);

}  // namespace pfa
