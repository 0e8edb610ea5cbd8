#pragma once

// Geometry of a rectangular waveguide of edge a bent along a circle of
// radius R, in the tube coordinates (s, xi, z):
//
//   dr^2 = dxi^2 + dz^2 + (1 - kappa xi)^2 ds^2,   kappa = 1/R
//
// xi runs across the width, xi in [-xi0, +xi0] with xi0 = a/2. The physical
// radius is r = R (1 - kappa xi), so xi = +xi0 is the inner wall.
//
// Energies are expressed in spectral units (hbar^2 / 2M = 1), which gives
// them the dimension 1/length^2. UnitSystem converts at the output boundary.

#include <limits>
#include <vector>

namespace bentguide {

class WaveguideGeometry {
 public:
  /// Bent guide; rejects non-positive inputs and a >= 2R.
  static WaveguideGeometry bent(double bend_radius, double width);
  /// Straight guide (kappa = 0), used as the reference limit.
  static WaveguideGeometry straight(double width);

  double bend_radius() const { return bend_radius_; }
  double width() const { return width_; }
  double height() const { return width_; }
  double curvature() const { return curvature_; }
  double half_width() const { return width_ / 2.0; }
  bool is_straight() const { return curvature_ == 0.0; }

  /// mu = 1 - kappa xi at the outer (xi = -xi0) and inner (xi = +xi0) walls.
  double mu_outer() const { return 1.0 + curvature_ * half_width(); }
  double mu_inner() const { return 1.0 - curvature_ * half_width(); }

 private:
  WaveguideGeometry(double bend_radius, double width, double curvature)
      : bend_radius_(bend_radius), width_(width), curvature_(curvature) {}

  double bend_radius_;
  double width_;
  double curvature_;
};

WaveguideGeometry make_geometry(double bend_radius, double width);

struct ModeIndex {
  int n = 1;  // z quantum number
  int l = 1;  // index of the lower J0 zero
  int w = 1;  // zero count across the width
  static constexpr int m = 0;
};

/// Validates n, l, w >= 1.
ModeIndex make_mode(int n, int l, int w);

struct UnitSystem {
  double hbar = 1.0;
  double mass = 0.5;

  /// hbar^2 / (2M); multiplies spectral energies into user units.
  double energy_scale() const { return hbar * hbar / (2.0 * mass); }
};

UnitSystem make_unit_system(double hbar, double mass);

struct LameCoefficients {
  double h_xi;
  double h_z;
  double h_s;
};

LameCoefficients lame_coefficients(const WaveguideGeometry& geom, double xi);

/// mu = 1 - kappa xi.
double to_mu(const WaveguideGeometry& geom, double xi);
/// Inverse of to_mu; requires a bent geometry.
double from_mu(const WaveguideGeometry& geom, double mu);

/// -kappa^2 / (4 (1 - kappa xi)^2), the m = 0 anticentrifugal term.
double anticentrifugal_potential(const WaveguideGeometry& geom, double xi);

/// n^2 pi^2 / a^2 - kappa^2 / (4 (1 - kappa xi)^2). n = 0 drops the z
/// confinement term and leaves the radial problem alone.
double effective_potential(const WaveguideGeometry& geom, int n, double xi);

/// n^2 pi^2 / a^2.
double transverse_z_energy(const WaveguideGeometry& geom, int n);

enum class PotentialKind { effective, bohm };

const char* to_string(PotentialKind kind);

struct PotentialProfile {
  std::vector<double> xi;
  std::vector<double> values;
  PotentialKind kind = PotentialKind::effective;

  std::size_t size() const { return xi.size(); }
  bool empty() const { return xi.empty(); }
};

/// `samples` equally spaced points spanning [-xi0, +xi0] inclusive.
std::vector<double> sample_points(const WaveguideGeometry& geom, int samples);

PotentialProfile sample_effective_potential(const WaveguideGeometry& geom, int n,
                                            int samples);

/// Throws DomainError unless xi is strictly increasing, inside the width and
/// every value is finite.
void check_profile(const WaveguideGeometry& geom, const PotentialProfile& profile);

}  // namespace bentguide
