#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bentguide/bessel.hpp"
#include "bentguide/errors.hpp"
#include "bentguide/spectrum.hpp"
#include "golden_values.hpp"

using namespace bentguide;
using std::numbers::pi;

namespace {

// Composite Simpson rule on [lo, hi] with an even number of panels.
template <class F>
double simpson(F&& f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("closed-form energy from the zero table") {
  const auto g = make_geometry(2.0, 1.0);
  // (5.5201 - 2.4048)^2 + pi^2 with the 4-decimal table
  CHECK(energy_closed_form(g, make_mode(1, 1, 1)) == doctest::Approx(19.5747).epsilon(5e-5));
  CHECK(energy_closed_form(g, make_mode(2, 1, 2)) == doctest::Approx(78.5272).epsilon(5e-5));
  const double z1 = bessel::j0_zero(1), z2 = bessel::j0_zero(2);
  CHECK(energy_closed_form(g, make_mode(1, 1, 1)) == doctest::Approx((z2 - z1) * (z2 - z1) + pi * pi).epsilon(1e-15));
  // independent of curvature
  CHECK(energy_closed_form(make_geometry(50.0, 1.0), make_mode(1, 1, 1)) ==
        energy_closed_form(g, make_mode(1, 1, 1)));
}

TEST_CASE("closed-form energy approaches the straight guide for large l") {
  const auto g = make_geometry(2.0, 1.0);
  CHECK(std::abs(energy_closed_form(g, make_mode(1, 1000, 1)) - 2.0 * pi * pi) < 1e-6);
  CHECK_THROWS_AS(energy_closed_form(g, ModeIndex{1, 1, 0}), DomainError);
}

TEST_CASE("closed-form radial wavefunction") {
  const auto g = make_geometry(2.0, 1.0);
  const double kappa = g.curvature();
  const double eps = 2.8;
  const double energy = eps * eps * kappa * kappa + pi * pi;
  // node where eps mu = zeta_1
  const double xi_node = (1.0 - bessel::j0_zero(1) / eps) / kappa;
  CHECK(std::abs(radial_wavefunction_paper(g, energy, 1, xi_node)) < 1e-14);
  CHECK(radial_wavefunction_paper(g, energy, 1, 0.0) ==
        doctest::Approx(std::sqrt(eps) * bessel::bessel_j(0, eps)).epsilon(1e-14));

  const double eps2 = 5.5201 / 1.1;
  const double energy2 = eps2 * eps2 * kappa * kappa + pi * pi;
  CHECK(std::abs(radial_wavefunction_paper(g, energy2, 1, (1.0 - 1.1) / kappa)) < 1e-4);

  CHECK_THROWS_AS(radial_wavefunction_paper(g, pi * pi, 1, 0.0), DomainError);
  CHECK_THROWS_AS(radial_wavefunction_paper(g, 0.5 * pi * pi, 1, 0.0), DomainError);
}

TEST_CASE("closed-form RadialSolution") {
  const auto g = make_geometry(2.0, 1.0);
  const RadialSolution s = closed_form_solution(g, make_mode(1, 2, 1));
  CHECK(s.method == SolutionMethod::paper_closed_form);
  CHECK(s.coeff_y == 0.0);
  CHECK(s.paper_mode.has_value());
  CHECK(s.energy - pi * pi == doctest::Approx(s.epsilon * s.epsilon * 0.25).epsilon(1e-12));
  CHECK_THROWS_AS(closed_form_solution(WaveguideGeometry::straight(1.0), make_mode(1, 1, 1)), DomainError);
}

TEST_CASE("exact modes: straight limit") {
  const auto g = make_geometry(500.0, 1.0);
  const auto modes = solve_exact_modes(g, 1, 1);
  CHECK(std::abs(modes[0].energy - 2.0 * pi * pi) / (2.0 * pi * pi) < 1e-3);
}

TEST_CASE("exact modes match the finite-difference golden values") {
  const auto g = make_geometry(2.0, 1.0);
  const auto modes = solve_exact_modes(g, 1, 3);
  for (int k = 0; k < 3; ++k) {
    CAPTURE(k);
    CHECK(std::abs(modes[k].energy - golden::kR2A1Energy[k]) / golden::kR2A1Energy[k] < 1e-6);
    CHECK(modes[k].method == SolutionMethod::exact_cross_product);
    CHECK(modes[k].radial_order == k + 1);
    CHECK_FALSE(modes[k].norm_C.has_value());
  }
}

TEST_CASE("exact modes: binding, wall condition, energy reconstruction, interlacing") {
  for (double ratio : {0.01, 0.1, 0.3, 0.5, 0.9, 1.5}) {
    const auto g = make_geometry(1.0 / ratio, 1.0);
    const double kappa = g.curvature();
    const auto modes = solve_exact_modes(g, 2, 6);
    CAPTURE(ratio);
    // anticentrifugal binding below the straight threshold
    CHECK(modes[0].epsilon * modes[0].epsilon * kappa * kappa < pi * pi);

    for (std::size_t k = 0; k < modes.size(); ++k) {
      const RadialSolution& m = modes[k];
      const double radial = m.energy - transverse_z_energy(g, 2);
      CHECK(std::abs(radial - m.epsilon * m.epsilon * kappa * kappa) <= 1e-12 * radial);
      if (k > 0) CHECK(m.epsilon > modes[k - 1].epsilon);

      double peak = 0.0;
      for (int i = 0; i <= 400; ++i) {
        const double xi = -g.half_width() + i * g.width() / 400.0;
        peak = std::max(peak, std::abs(radial_profile(m, g, std::clamp(xi, -g.half_width(), g.half_width()))));
      }
      CHECK(std::abs(radial_profile(m, g, g.half_width())) < 1e-9 * peak);
      CHECK(std::abs(radial_profile(m, g, -g.half_width())) < 1e-9 * peak);
    }
  }
}

TEST_CASE("exact modes: eps_k width / (k pi) tends to one") {
  const auto g = make_geometry(2.0, 1.0);
  const double width = g.mu_outer() - g.mu_inner();
  const auto modes = solve_exact_modes(g, 1, 60);
  double previous = 0.0;
  for (int k : {1, 5, 20, 60}) {
    const double deviation = std::abs(modes[k - 1].epsilon * width / (k * pi) - 1.0);
    CAPTURE(k);
    if (previous > 0.0) CHECK(deviation < previous);
    previous = deviation;
  }
  CHECK(previous < 1e-3);
}

TEST_CASE("closed form vs exact: thin guides within 1%, discrepancy reported for thick") {
  const ModeIndex ground = make_mode(1, 1, 1);
  for (double ratio : {0.01, 0.05, 0.1}) {
    const auto g = make_geometry(1.0 / ratio, 1.0);
    const double exact = solve_exact_modes(g, 1, 1)[0].energy;
    CHECK(std::abs(energy_closed_form(g, ground) - exact) / exact < 0.01);
  }
}

TEST_CASE("norm integral of simple profiles") {
  const auto g = make_geometry(2.0, 1.0);
  const double a = g.width();
  const double box = norm_integral(g, [](double) { return 1.0; }, ZProfile::constant);
  CHECK(box == doctest::Approx(a * a * pi * g.bend_radius()).epsilon(1e-14));
  const double sine = norm_integral(g, [](double) { return 1.0; }, ZProfile::sine);
  CHECK(sine == doctest::Approx(box / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(norm_integral(WaveguideGeometry::straight(1.0), [](double) { return 1.0; }, ZProfile::sine),
                  DomainError);
}

TEST_CASE("normalized ground mode has unit norm under the curved measure") {
  const auto g = make_geometry(2.0, 1.0);
  const RadialSolution s = normalize(solve_exact_modes(g, 1, 1)[0], g);
  REQUIRE(s.norm_C.has_value());
  CHECK(*s.norm_C > 0.0);

  // independent 2D Simpson over (xi, z); the s integral is the bend length
  const double xi0 = g.half_width();
  const double kappa = g.curvature();
  auto inner = [&](double xi) {
    const double x = std::clamp(xi, -xi0, xi0);
    auto integrand = [&](double z) {
      const double psi = wavefunction_psi(s, g, x, z);
      return psi * psi * (1.0 - kappa * x);
    };
    return simpson(integrand, 0.0, g.height(), 400);
  };
  const double total = simpson(inner, -xi0, xi0, 400) * pi * g.bend_radius();
  CHECK(std::abs(total - 1.0) < 1e-9);

  RadialSolution unnormalized = solve_exact_modes(g, 1, 1)[0];
  CHECK_THROWS_AS(wavefunction_psi(unnormalized, g, 0.0, 0.5), DomainError);
  unnormalized.epsilon = 0.0;
  CHECK_THROWS_AS(normalize(unnormalized, g), DomainError);
}

TEST_CASE("zero spacing deficit") {
  CHECK(zero_spacing_deficit(1, 1) == doctest::Approx(pi - 3.1153).epsilon(5e-3));
  CHECK(std::abs(zero_spacing_deficit(1, 1) - (pi - 3.1153)) < 1e-4);
  CHECK(std::abs(zero_spacing_deficit(4, 1) - (pi - (14.9309 - 11.7915))) < 1e-4);
  CHECK(zero_spacing_deficit(4, 1) == doctest::Approx(0.0022).epsilon(0.01));
  CHECK(zero_spacing_deficit(1000, 1) > 0.0);
  CHECK(zero_spacing_deficit(1000, 1) < 1e-6);
  for (int w = 1; w <= 4; ++w) {
    double previous = INFINITY;
    for (int l = 1; l <= 50; ++l) {
      const double d = zero_spacing_deficit(l, w);
      REQUIRE(d > 0.0);
      REQUIRE(d < previous);
      previous = d;
    }
  }
  CHECK_THROWS_AS(zero_spacing_deficit(0, 1), DomainError);
  CHECK_THROWS_AS(zero_spacing_deficit(1, 0), DomainError);
}

TEST_CASE("compute_spectrum orders modes by energy") {
  const auto g = make_geometry(2.0, 1.0);
  const SpectrumResult r = compute_spectrum(g, 3, 4);
  CHECK(r.modes.size() == 12);
  CHECK(r.n_max == 3);
  CHECK(r.radial_count == 4);
  CHECK(std::is_sorted(r.modes.begin(), r.modes.end(),
                       [](const RadialSolution& a, const RadialSolution& b) { return a.energy < b.energy; }));
  CHECK_THROWS_AS(compute_spectrum(g, 0, 1), DomainError);
  CHECK_THROWS_AS(solve_exact_modes(WaveguideGeometry::straight(1.0), 1, 1), DomainError);
}
