#include "bentguide/observables.hpp"

#include <cmath>
#include <numbers>

#include "bentguide/bessel.hpp"
#include "bentguide/errors.hpp"

namespace bentguide {
namespace {

using std::numbers::pi;

double zero_gap(const ModeIndex& mode) {
  const ModeIndex checked = make_mode(mode.n, mode.l, mode.w);
  return bessel::j0_zero(checked.l + checked.w) - bessel::j0_zero(checked.l);
}

}  // namespace

const char* to_string(Variant variant) {
  switch (variant) {
    case Variant::paper_literal: return "paper_literal";
    case Variant::corrected: return "corrected";
    case Variant::exact: return "exact";
  }
  return "unknown";
}

Variant parse_variant(const std::string& text) {
  if (text == "paper" || text == "paper_literal") return Variant::paper_literal;
  if (text == "corrected") return Variant::corrected;
  if (text == "exact") return Variant::exact;
  throw DomainError("unknown variant '" + text + "'");
}

BohmCoefficients bohm_coefficients(const WaveguideGeometry& geom, const ModeIndex& mode) {
  if (geom.is_straight()) throw DomainError("Bohm coefficients diverge for a straight guide");
  const double gap = zero_gap(mode);
  const double d2 = gap * gap;
  const double kappa = geom.curvature();
  const double xi0 = geom.half_width();
  return {-2.0 * d2 / kappa, d2, d2 / (kappa * kappa) + xi0 * xi0};
}

double bohm_potential(const WaveguideGeometry& geom, const ModeIndex& mode, double xi) {
  const double xi0 = geom.half_width();
  if (geom.is_straight()) {
    to_mu(geom, xi);  // range check
    const double gap = zero_gap(mode);
    return gap * gap / (4.0 * xi0 * xi0);
  }
  const BohmCoefficients c = bohm_coefficients(geom, mode);
  const double kappa = geom.curvature();
  const double mu = to_mu(geom, xi);
  const double numerator = kappa * kappa * ((c.a2 * xi + c.a1) * xi + c.a3);
  return numerator / (4.0 * xi0 * xi0 * mu * mu);
}

PotentialProfile sample_bohm_potential(const WaveguideGeometry& geom, const ModeIndex& mode,
                                       int samples) {
  PotentialProfile profile;
  profile.kind = PotentialKind::bohm;
  profile.xi = sample_points(geom, samples);
  profile.values.reserve(profile.xi.size());
  for (double x : profile.xi) profile.values.push_back(bohm_potential(geom, mode, x));
  return profile;
}

double bohm_barrier(const WaveguideGeometry& geom, const ModeIndex& mode) {
  const double gap = zero_gap(mode);
  const double xi0 = geom.half_width();
  const double kappa = geom.curvature();
  return gap * gap / (4.0 * xi0 * xi0) + kappa * kappa / 4.0 + transverse_z_energy(geom, mode.n);
}

double momentum_shift(double energy, double barrier, Variant variant) {
  if (!(energy > 0.0) || !std::isfinite(energy)) throw DomainError("energy must be positive");
  if (!std::isfinite(barrier)) throw DomainError("barrier must be finite");
  const double p = std::sqrt(energy);
  switch (variant) {
    case Variant::paper_literal:
      return barrier / p;
    case Variant::corrected:
      return barrier / (2.0 * p);
    case Variant::exact:
      if (!(energy > barrier)) {
        throw DomainError("barrier Q0 exceeds the energy; no propagating comparison");
      }
      // p - sqrt(p^2 - Q0) without cancellation
      return barrier / (p + std::sqrt(energy - barrier));
  }
  throw DomainError("unknown variant");
}

double phase_shift(const WaveguideGeometry& geom, double delta_p, Variant variant, double hbar) {
  if (!(delta_p >= 0.0)) throw DomainError("momentum shift must be non-negative");
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  if (delta_p == 0.0) return 0.0;
  if (geom.is_straight()) throw DomainError("a straight guide has no bend path length");
  const double path = pi / geom.curvature();
  if (variant == Variant::paper_literal) return path * delta_p;
  return path * delta_p / hbar;
}

double min_phase_shift(double wavelength, double curvature, Variant variant, double hbar) {
  if (!(wavelength > 0.0)) throw DomainError("wavelength must be positive");
  if (!(curvature >= 0.0)) throw DomainError("curvature must be non-negative");
  if (variant == Variant::paper_literal) return hbar * wavelength * curvature / 8.0;
  return wavelength * curvature / 16.0;
}

PhaseShiftResult predict_phase_shift(const WaveguideGeometry& geom, const ModeIndex& mode,
                                     double energy, Variant variant) {
  const double dp = momentum_shift(energy, bohm_barrier(geom, mode), variant);
  return {dp, phase_shift(geom, dp, variant), variant};
}

double anticentrifugal_force(const WaveguideGeometry& geom) {
  const double kappa = geom.curvature();
  return 0.5 * kappa * kappa * kappa;
}

}  // namespace bentguide
