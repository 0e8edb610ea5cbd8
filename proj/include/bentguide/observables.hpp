#pragma once

// Derived quantities for a bent guide: the Bohm potential of a closed-form
// mode and its barrier height, the momentum and interference phase shift
// the barrier produces, and the anticentrifugal force on the centerline.
//
// Two readings of the momentum shift are kept side by side:
//   paper_literal  dp = Q0 / p          (prefactor hbar^2 / p)
//   corrected      dp = Q0 / (2 p)      (first-order Taylor expansion)
//   exact          dp = p - sqrt(p^2 - Q0)
// with p = sqrt(E) in spectral units. The paper_literal phase keeps
// dphi = (pi / kappa) dp without dividing by hbar.

#include <string>

#include "bentguide/geometry.hpp"

namespace bentguide {

enum class Variant { paper_literal, corrected, exact };

const char* to_string(Variant variant);
Variant parse_variant(const std::string& text);

struct BohmCoefficients {
  double a1;  // -2 D^2 / kappa
  double a2;  // D^2
  double a3;  // D^2 / kappa^2 + xi0^2
};

/// D = zeta_{l+w} - zeta_l. Requires kappa > 0.
BohmCoefficients bohm_coefficients(const WaveguideGeometry& geom, const ModeIndex& mode);

/// Q(xi) = kappa^2 (a2 xi^2 + a1 xi + a3) / (4 xi0^2 (1 - kappa xi)^2).
/// Falls back to its kappa -> 0 limit D^2 / (4 xi0^2) for a straight guide.
double bohm_potential(const WaveguideGeometry& geom, const ModeIndex& mode, double xi);

PotentialProfile sample_bohm_potential(const WaveguideGeometry& geom, const ModeIndex& mode,
                                       int samples);

/// Q0 = D^2 / (4 xi0^2) + kappa^2 / 4 + n^2 pi^2 / a^2.
double bohm_barrier(const WaveguideGeometry& geom, const ModeIndex& mode);

double momentum_shift(double energy, double barrier, Variant variant);

/// paper_literal: (pi / kappa) dp. corrected and exact: (pi / kappa) dp / hbar.
double phase_shift(const WaveguideGeometry& geom, double delta_p, Variant variant,
                   double hbar = 1.0);

/// paper_literal: hbar lambda kappa / 8. corrected: lambda kappa / 16.
double min_phase_shift(double wavelength, double curvature, Variant variant, double hbar = 1.0);

struct PhaseShiftResult {
  double delta_p;
  double delta_phi;
  Variant variant;
};

/// Momentum and phase shift of a particle with spectral energy `energy`
/// crossing the bend in the given closed-form mode.
PhaseShiftResult predict_phase_shift(const WaveguideGeometry& geom, const ModeIndex& mode,
                                     double energy, Variant variant);

/// kappa^3 / 2 in spectral units; -dV_eff/dxi at xi = 0.
double anticentrifugal_force(const WaveguideGeometry& geom);

}  // namespace bentguide
