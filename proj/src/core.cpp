#include "pfa/core.hpp"

#include <cmath>

namespace pfa {

std::string_view to_string(ModeSector sector) {
  switch (sector) {
    case ModeSector::TE: return "te";
    case ModeSector::TM: return "tm";
    case ModeSector::Both: return "both";
  }
  throw ConfigurationError("unknown mode sector");
}

std::string_view to_string(PfaSurface surface) {
  switch (surface) {
    case PfaSurface::Inner: return "inner";
    case PfaSurface::Outer: return "outer";
    case PfaSurface::GeometricMean: return "geomean";
  }
  throw ConfigurationError("unknown PFA surface");
}

std::string_view to_string(Geometry geometry) {
  switch (geometry) {
    case Geometry::ConcentricCylinders: return "cc";
    case Geometry::ConcentricSpheres: return "cs";
    case Geometry::CylinderPlane: return "cp";
    case Geometry::SpherePlane: return "sp";
  }
  throw ConfigurationError("unknown geometry tag");
}

ModeSector parse_sector(std::string_view text) {
  if (text == "te") return ModeSector::TE;
  if (text == "tm") return ModeSector::TM;
  if (text == "both") return ModeSector::Both;
  throw ConfigurationError("unknown mode sector '" + std::string(text) + "'");
}

PfaSurface parse_surface(std::string_view text) {
  if (text == "inner") return PfaSurface::Inner;
  if (text == "outer") return PfaSurface::Outer;
  if (text == "geomean") return PfaSurface::GeometricMean;
  throw ConfigurationError("unknown PFA surface '" + std::string(text) + "'");
}

double pfa_area_factor(PfaSurface surface, double alpha, int dimension) {
  switch (surface) {
    case PfaSurface::Inner: return 1.0;
    case PfaSurface::Outer: return std::pow(alpha, dimension);
    case PfaSurface::GeometricMean: return std::pow(alpha, 0.5 * dimension);
  }
  throw ConfigurationError("unknown PFA surface");
}

double sector_share(ModeSector sector) {
  switch (sector) {
    case ModeSector::TE:
    case ModeSector::TM: return 0.5;
    case ModeSector::Both: return 1.0;
  }
  throw ConfigurationError("unknown mode sector");
}

EnergyValue make_energy(double value, double abs_error, Truncation truncation) {
  if (!std::isfinite(value)) throw RangeError("energy is not finite");
  if (!(abs_error >= 0.0)) throw DomainError("energy error estimate must be non-negative");
  return EnergyValue{value, abs_error, truncation};
}

GapParameter::GapParameter(GapKind kind, double value) : kind_(kind), value_(value) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError("gap parameter must be a positive finite number");
}

GapKind gap_kind(Geometry geometry) {
  switch (geometry) {
    case Geometry::ConcentricCylinders:
    case Geometry::ConcentricSpheres: return GapKind::AlphaMinusOne;
    case Geometry::CylinderPlane:
    case Geometry::SpherePlane: return GapKind::DOverA;
  }
  throw ConfigurationError("unknown geometry tag");
}

double normalize_energy(double raw, Geometry geometry, Interaction interaction,
                        const PhysicalScales& s) {
  bool cylindrical = false;
  switch (geometry) {
    case Geometry::ConcentricCylinders:
    case Geometry::CylinderPlane: cylindrical = true; break;
    case Geometry::ConcentricSpheres:
    case Geometry::SpherePlane: cylindrical = false; break;
    default: throw ConfigurationError("unknown geometry tag");
  }
  switch (interaction) {
    case Interaction::Casimir:
      return cylindrical ? raw * s.radius * s.radius / s.length : raw * s.radius;
    case Interaction::Electrostatic: {
      const double field = s.permittivity * s.voltage * s.voltage;
      return cylindrical ? raw / (field * s.length) : raw / (field * s.radius);
    }
  }
  throw ConfigurationError("unknown interaction tag");
}

}  // namespace pfa
