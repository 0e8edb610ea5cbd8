#include "bentguide/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bentguide/bessel.hpp"
#include "bentguide/errors.hpp"

namespace bentguide {
namespace {

using std::numbers::pi;

constexpr double kNormTolerance = 1e-10;

void require_bent(const WaveguideGeometry& geom) {
  if (geom.is_straight()) throw DomainError("radial Bessel solutions require curvature > 0");
}

double zero_gap(int l, int w) {
  if (w < 1) throw DomainError("w must be >= 1; w = 0 leaves no radial content");
  return bessel::j0_zero(l + w) - bessel::j0_zero(l);
}

}  // namespace

const char* to_string(SolutionMethod method) {
  return method == SolutionMethod::paper_closed_form ? "paper_closed_form" : "exact_cross_product";
}

double energy_closed_form(const WaveguideGeometry& geom, const ModeIndex& mode) {
  const ModeIndex checked = make_mode(mode.n, mode.l, mode.w);
  const double gap = zero_gap(checked.l, checked.w);
  const double xi0 = geom.half_width();
  return gap * gap / (4.0 * xi0 * xi0) + transverse_z_energy(geom, checked.n);
}

RadialSolution closed_form_solution(const WaveguideGeometry& geom, const ModeIndex& mode) {
  require_bent(geom);
  RadialSolution out;
  out.energy = energy_closed_form(geom, mode);
  out.epsilon = zero_gap(mode.l, mode.w) / (2.0 * geom.half_width() * geom.curvature());
  out.coeff_j = 1.0;
  out.coeff_y = 0.0;
  out.n = mode.n;
  out.radial_order = mode.w;
  out.paper_mode = mode;
  out.method = SolutionMethod::paper_closed_form;
  return out;
}

double radial_wavefunction_paper(const WaveguideGeometry& geom, double energy, int n, double xi) {
  require_bent(geom);
  const double radial = energy - transverse_z_energy(geom, n);
  if (!(radial > 0.0)) {
    throw DomainError("energy must exceed n^2 pi^2 / a^2 for an oscillatory radial solution");
  }
  const double eps = std::sqrt(radial) / geom.curvature();
  const double zeta = eps * to_mu(geom, xi);
  return std::sqrt(zeta) * bessel::bessel_j(0, zeta);
}

std::vector<RadialSolution> solve_exact_modes(const WaveguideGeometry& geom, int n, int count) {
  require_bent(geom);
  if (n < 1) throw DomainError("z quantum number n must be >= 1");
  if (count < 1) throw DomainError("mode count must be >= 1");

  const double mu_in = geom.mu_inner();
  const double mu_out = geom.mu_outer();
  const double kappa = geom.curvature();
  const double z_energy = transverse_z_energy(geom, n);
  const std::vector<double> roots = bessel::cross_product_zeros(mu_in, mu_out, count);

  std::vector<RadialSolution> modes;
  modes.reserve(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const double eps = roots[k];
    const bessel::CylinderValues outer = bessel::cylinder(eps * mu_out);
    RadialSolution s;
    s.epsilon = eps;
    s.energy = eps * eps * kappa * kappa + z_energy;
    // Vanishes identically at mu_out; at mu_in by the root condition.
    s.coeff_j = outer.y0;
    s.coeff_y = -outer.j0;
    s.n = n;
    s.radial_order = static_cast<int>(k) + 1;
    s.method = SolutionMethod::exact_cross_product;
    modes.push_back(s);
  }
  return modes;
}

double radial_profile(const RadialSolution& solution, const WaveguideGeometry& geom, double xi) {
  require_bent(geom);
  const double zeta = solution.epsilon * to_mu(geom, xi);
  const bessel::CylinderValues v = bessel::cylinder(zeta);
  return std::sqrt(zeta) * (solution.coeff_j * v.j0 + solution.coeff_y * v.y0);
}

double norm_integral(const WaveguideGeometry& geom, const std::function<double(double)>& phi0,
                     ZProfile z_profile) {
  if (geom.is_straight()) throw DomainError("a straight guide has no finite bend length");
  const double xi0 = geom.half_width();
  auto density = [&](double xi) {
    const double phi = phi0(std::clamp(xi, -xi0, xi0));
    return phi * phi;
  };
  double error = 0.0;
  const double radial = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      density, -xi0, xi0, 20, kNormTolerance, &error);
  if (!(radial > 0.0) || !std::isfinite(radial) || error > kNormTolerance * radial) {
    throw NumericalError("normalization quadrature missed its tolerance (estimate " +
                         std::to_string(error / radial) + ")");
  }
  // int_0^a sin^2(n pi z / a) dz = a / 2 for every n >= 1
  const double z_factor = z_profile == ZProfile::sine ? geom.height() / 2.0 : geom.height();
  const double s_length = pi * geom.bend_radius();
  return radial * z_factor * s_length;
}

RadialSolution normalize(RadialSolution solution, const WaveguideGeometry& geom) {
  require_bent(geom);
  if (!(solution.epsilon > 0.0) || !std::isfinite(solution.epsilon)) {
    throw DomainError("solution has no valid epsilon");
  }
  solution.norm_C = norm_integral(
      geom, [&](double xi) { return radial_profile(solution, geom, xi); }, ZProfile::sine);
  return solution;
}

double wavefunction_psi(const RadialSolution& solution, const WaveguideGeometry& geom, double xi,
                        double z) {
  if (!solution.norm_C) throw DomainError("solution is not normalized");
  const double mu = to_mu(geom, xi);
  const double z_part = std::sin(solution.n * pi * z / geom.height());
  return z_part * radial_profile(solution, geom, xi) / std::sqrt(*solution.norm_C * mu);
}

double zero_spacing_deficit(int l, int w) {
  if (l < 1) throw DomainError("l must be >= 1");
  return w * pi - zero_gap(l, w);
}

SpectrumResult compute_spectrum(const WaveguideGeometry& geom, int n_max, int radial_count) {
  if (n_max < 1 || radial_count < 1) throw DomainError("n_max and radial_count must be >= 1");
  SpectrumResult result{geom, {}, n_max, radial_count};
  for (int n = 1; n <= n_max; ++n) {
    auto modes = solve_exact_modes(geom, n, radial_count);
    result.modes.insert(result.modes.end(), modes.begin(), modes.end());
  }
  std::stable_sort(result.modes.begin(), result.modes.end(),
                   [](const RadialSolution& a, const RadialSolution& b) { return a.energy < b.energy; });
  return result;
}

}  // namespace bentguide
