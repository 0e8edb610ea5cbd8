#pragma once

// Transverse mode energies at zero angular momentum, two ways:
//
//  * paper_closed_form: J0 zeros imposed on both walls,
//      E = (zeta_{l+w} - zeta_l)^2 / (4 xi0^2) + n^2 pi^2 / a^2,
//    with (l, w) chosen by the caller. Approximate: a single J0 profile
//    meets both walls only for special geometries.
//  * exact_cross_product: Phi0 = sqrt(eps mu) [cj J0(eps mu) + cy Y0(eps mu)]
//    with eps a root of the J0/Y0 cross product over [mu_in, mu_out].
//
// In both cases E = eps^2 kappa^2 + n^2 pi^2 / a^2 in spectral units.

#include <functional>
#include <optional>
#include <vector>

#include "bentguide/geometry.hpp"

namespace bentguide {

enum class SolutionMethod { paper_closed_form, exact_cross_product };

const char* to_string(SolutionMethod method);

struct RadialSolution {
  double epsilon = 0.0;
  double energy = 0.0;
  double coeff_j = 1.0;
  double coeff_y = 0.0;
  std::optional<double> norm_C;
  int n = 1;
  /// k for exact modes; w for closed-form modes.
  int radial_order = 1;
  /// (n, l, w) for closed-form modes.
  std::optional<ModeIndex> paper_mode;
  SolutionMethod method = SolutionMethod::exact_cross_product;
};

struct SpectrumResult {
  WaveguideGeometry geometry;
  std::vector<RadialSolution> modes;
  int n_max = 0;
  int radial_count = 0;
};

double energy_closed_form(const WaveguideGeometry& geom, const ModeIndex& mode);

/// Closed-form mode as a RadialSolution (coeff_y = 0). Needs kappa > 0.
RadialSolution closed_form_solution(const WaveguideGeometry& geom, const ModeIndex& mode);

/// sqrt(eps mu) J0(eps mu), eps = sqrt(E - n^2 pi^2 / a^2) / kappa.
double radial_wavefunction_paper(const WaveguideGeometry& geom, double energy, int n, double xi);

/// The `count` lowest exact radial modes for z quantum number n.
std::vector<RadialSolution> solve_exact_modes(const WaveguideGeometry& geom, int n, int count);

/// Phi0(xi) of a solution, without the 1/sqrt(C) factor.
double radial_profile(const RadialSolution& solution, const WaveguideGeometry& geom, double xi);

enum class ZProfile { constant, sine };

/// int_0^a int_{-xi0}^{xi0} int_0^{pi R} |Phi0(xi) Z(z)|^2 dz dxi ds with Z = 1
/// or sin(n pi z / a). The xi integral is adaptive Gauss-Kronrod to relative
/// 1e-10; the z and s integrals are analytic. Throws NumericalError on a
/// missed tolerance.
double norm_integral(const WaveguideGeometry& geom, const std::function<double(double)>& phi0,
                     ZProfile z_profile);

/// Sets norm_C = int_0^a int_{-xi0}^{xi0} int_0^{pi R} |Phi|^2 dz dxi ds for
/// Phi = sin(n pi z / a) Phi0(xi) (m = 0, so the s factor is 1).
RadialSolution normalize(RadialSolution solution, const WaveguideGeometry& geom);

/// Psi = Phi / sqrt(C (1 - kappa xi)); requires a normalized solution.
double wavefunction_psi(const RadialSolution& solution, const WaveguideGeometry& geom, double xi,
                        double z);

/// w pi - (zeta_{l+w} - zeta_l).
double zero_spacing_deficit(int l, int w);

/// Exact modes for n = 1..n_max, radial_count each, sorted by energy.
SpectrumResult compute_spectrum(const WaveguideGeometry& geom, int n_max, int radial_count);

}  // namespace bentguide
