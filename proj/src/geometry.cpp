#include "bentguide/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bentguide/errors.hpp"

namespace bentguide {
namespace {

// Sample grids built from -xi0 + i*h can land an ulp or two past the wall.
constexpr double kWallSlack = 1e-14;

void require_inside(const WaveguideGeometry& geom, double xi) {
  const double xi0 = geom.half_width();
  if (!std::isfinite(xi) || std::abs(xi) > xi0 * (1.0 + kWallSlack)) {
    throw DomainError("xi = " + std::to_string(xi) + " lies outside [-xi0, xi0] with xi0 = " +
                      std::to_string(xi0));
  }
}

}  // namespace

WaveguideGeometry WaveguideGeometry::bent(double bend_radius, double width) {
  if (!(bend_radius > 0.0) || !std::isfinite(bend_radius)) {
    throw DomainError("bend radius must be positive and finite");
  }
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw DomainError("width must be positive and finite");
  }
  if (width >= 2.0 * bend_radius) {
    throw DomainError("width must be smaller than twice the bend radius (inner wall radius R - a/2 > 0)");
  }
  return WaveguideGeometry(bend_radius, width, 1.0 / bend_radius);
}

WaveguideGeometry WaveguideGeometry::straight(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw DomainError("width must be positive and finite");
  }
  return WaveguideGeometry(std::numeric_limits<double>::infinity(), width, 0.0);
}

WaveguideGeometry make_geometry(double bend_radius, double width) {
  return WaveguideGeometry::bent(bend_radius, width);
}

ModeIndex make_mode(int n, int l, int w) {
  if (n < 1) throw DomainError("mode index n must be >= 1");
  if (l < 1) throw DomainError("mode index l must be >= 1");
  if (w < 1) throw DomainError("mode index w must be >= 1");
  return ModeIndex{n, l, w};
}

UnitSystem make_unit_system(double hbar, double mass) {
  if (!(hbar > 0.0) || !(mass > 0.0) || !std::isfinite(hbar) || !std::isfinite(mass)) {
    throw DomainError("hbar and mass must be positive and finite");
  }
  return UnitSystem{hbar, mass};
}

LameCoefficients lame_coefficients(const WaveguideGeometry& geom, double xi) {
  require_inside(geom, xi);
  return {1.0, 1.0, 1.0 - geom.curvature() * xi};
}

double to_mu(const WaveguideGeometry& geom, double xi) {
  require_inside(geom, xi);
  return 1.0 - geom.curvature() * xi;
}

double from_mu(const WaveguideGeometry& geom, double mu) {
  if (geom.is_straight()) throw DomainError("mu coordinate is degenerate for a straight guide");
  const double xi = (1.0 - mu) / geom.curvature();
  require_inside(geom, xi);
  return xi;
}

double anticentrifugal_potential(const WaveguideGeometry& geom, double xi) {
  const double mu = to_mu(geom, xi);
  const double kappa = geom.curvature();
  return -kappa * kappa / (4.0 * mu * mu);
}

double transverse_z_energy(const WaveguideGeometry& geom, int n) {
  if (n < 0) throw DomainError("z quantum number must be non-negative");
  const double k = n * std::numbers::pi / geom.height();
  return k * k;
}

double effective_potential(const WaveguideGeometry& geom, int n, double xi) {
  return transverse_z_energy(geom, n) + anticentrifugal_potential(geom, xi);
}

const char* to_string(PotentialKind kind) {
  return kind == PotentialKind::effective ? "effective" : "bohm";
}

std::vector<double> sample_points(const WaveguideGeometry& geom, int samples) {
  if (samples < 2) throw DomainError("a profile needs at least 2 samples");
  const double xi0 = geom.half_width();
  std::vector<double> xi(static_cast<std::size_t>(samples));
  const double step = 2.0 * xi0 / (samples - 1);
  for (int i = 0; i < samples; ++i) xi[i] = -xi0 + i * step;
  xi.back() = xi0;
  return xi;
}

PotentialProfile sample_effective_potential(const WaveguideGeometry& geom, int n, int samples) {
  PotentialProfile profile;
  profile.kind = PotentialKind::effective;
  profile.xi = sample_points(geom, samples);
  profile.values.reserve(profile.xi.size());
  for (double x : profile.xi) profile.values.push_back(effective_potential(geom, n, x));
  return profile;
}

void check_profile(const WaveguideGeometry& geom, const PotentialProfile& profile) {
  if (profile.xi.size() != profile.values.size()) {
    throw DomainError("profile sample and value counts differ");
  }
  for (std::size_t i = 0; i < profile.xi.size(); ++i) {
    require_inside(geom, profile.xi[i]);
    if (i > 0 && !(profile.xi[i] > profile.xi[i - 1])) {
      throw DomainError("profile samples must be strictly increasing");
    }
    if (!std::isfinite(profile.values[i])) throw DomainError("profile value is not finite");
  }
}

}  // namespace bentguide
