#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfa {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr double kZeta4 = kPi * kPi * kPi * kPi / 90.0;

/// Relative tolerance used by every converged quantity unless the caller overrides it.
inline constexpr double kDefaultRelTol = 1e-8;

//------------------------------------------------------------------------------
// Error taxonomy
//------------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown tags, malformed settings.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Result not representable in double precision.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A quadrature, series or truncation failed to reach the requested tolerance.
/// Carries the best estimate obtained before giving up.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double abs_error)
      : Error(what), best_estimate_(best_estimate), abs_error_(abs_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double abs_error() const noexcept { return abs_error_; }

 private:
  double best_estimate_;
  double abs_error_;
};

/// Pivot underflow in a determinant.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Least-squares problem that cannot be solved (too few samples, collinear columns).
class FitError : public Error {
 public:
  using Error::Error;
};

//------------------------------------------------------------------------------
// Domain enumerations
//------------------------------------------------------------------------------

/// TM modes obey Dirichlet conditions, TE modes Neumann conditions.
enum class ModeSector { TE, TM, Both };

/// Which surface the parallel-plate energy density is integrated over.
enum class PfaSurface { Inner, Outer, GeometricMean };

enum class Geometry { ConcentricCylinders, ConcentricSpheres, CylinderPlane, SpherePlane };

enum class Interaction { Casimir, Electrostatic };

std::string_view to_string(ModeSector sector);
std::string_view to_string(PfaSurface surface);
std::string_view to_string(Geometry geometry);

ModeSector parse_sector(std::string_view text);
PfaSurface parse_surface(std::string_view text);

/// Area factor of a PFA surface relative to the inner surface, for a pair of
/// surfaces whose areas scale as alpha^dimension (1 for cylinders, 2 for spheres).
double pfa_area_factor(PfaSurface surface, double alpha, int dimension);

/// Fraction of a two-sector quantity carried by one sector when both contribute equally.
double sector_share(ModeSector sector);

//------------------------------------------------------------------------------
// Values
//------------------------------------------------------------------------------

struct Truncation {
  int mode_cutoff = 0;
  std::optional<int> matrix_size;
  double beta_cutoff = 0.0;
};

/// Dimensionless interaction energy with an error estimate.
///
/// Casimir energies are normalised with hbar = c = 1 and stripped of the
/// geometric scale (see normalize_energy); electrostatic energies are
/// additionally divided by eps0 V^2.
struct EnergyValue {
  double value = 0.0;
  double abs_error = 0.0;
  Truncation truncation{};
};

/// Builds an EnergyValue after checking the value is finite and the error non-negative.
EnergyValue make_energy(double value, double abs_error = 0.0, Truncation truncation = {});

enum class GapKind { AlphaMinusOne, DOverA };

/// Separation parameter: alpha - 1 for concentric shells, d/a for plane geometries.
class GapParameter {
 public:
  GapParameter(GapKind kind, double value);

  GapKind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }
  /// Only meaningful for AlphaMinusOne.
  double alpha() const noexcept { return 1.0 + value_; }

 private:
  GapKind kind_;
  double value_;
};

GapKind gap_kind(Geometry geometry);

/// Physical scales removed by normalize_energy. `radius` is the inner radius a
/// (sphere or cylinder radius for the plane geometries).
struct PhysicalScales {
  double radius = 1.0;
  double length = 1.0;
  double permittivity = 1.0;
  double voltage = 1.0;
};

/// Strips the scale factors from a raw energy:
///   cylinders, Casimir:        E a^2 / L
///   spheres, Casimir:          E a
///   cylinders, electrostatic:  U / (eps0 V^2 L)
///   spheres, electrostatic:    U / (eps0 V^2 a)
double normalize_energy(double raw, Geometry geometry, Interaction interaction,
                        const PhysicalScales& scales = {});

}  // namespace pfa
