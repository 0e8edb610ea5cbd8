#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bentguide/bessel.hpp"
#include "bentguide/errors.hpp"
#include "bentguide/observables.hpp"

using namespace bentguide;
using std::numbers::pi;

namespace {

// Q(xi) with the coefficients substituted symbolically:
// kappa^2 (D^2 xi^2 - 2 D^2 xi / kappa + D^2 / kappa^2 + xi0^2)
//   = D^2 (1 - kappa xi)^2 + kappa^2 xi0^2.
double bohm_simplified(double gap, double kappa, double xi0, double xi) {
  const double mu = 1.0 - kappa * xi;
  return gap * gap / (4.0 * xi0 * xi0) + kappa * kappa / (4.0 * mu * mu);
}

}  // namespace

TEST_CASE("Bohm coefficients from the zero table") {
  const auto g = make_geometry(1.0, 1.0);  // kappa = 1, xi0 = 0.5
  const BohmCoefficients c = bohm_coefficients(g, make_mode(1, 1, 1));
  CHECK(c.a2 == doctest::Approx(9.7051).epsilon(1e-4));
  CHECK(c.a1 == doctest::Approx(-19.4102).epsilon(1e-4));
  CHECK(c.a3 == doctest::Approx(9.9551).epsilon(1e-4));
  CHECK(c.a3 - c.a2 == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(c.a1 * c.a1 == doctest::Approx(4.0 * c.a2 * (c.a3 - 0.25)).epsilon(1e-12));
  CHECK_THROWS_AS(bohm_coefficients(g, ModeIndex{1, 1, 0}), DomainError);
  CHECK_THROWS_AS(bohm_coefficients(WaveguideGeometry::straight(1.0), make_mode(1, 1, 1)), DomainError);
}

TEST_CASE("Bohm potential: centerline, barrier consistency, independent evaluation") {
  const auto g = make_geometry(2.0, 1.0);
  const ModeIndex mode = make_mode(1, 1, 1);
  const double gap = bessel::j0_zero(2) - bessel::j0_zero(1);
  const double q0 = bohm_potential(g, mode, 0.0);
  CHECK(q0 == doctest::Approx(gap * gap / 1.0 + 0.0625).epsilon(1e-13));
  CHECK(std::abs(q0 + pi * pi - bohm_barrier(g, mode)) < 1e-12 * bohm_barrier(g, mode));
  CHECK(bohm_barrier(g, mode) == doctest::Approx(19.6372).epsilon(5e-5));

  const double q = bohm_potential(g, mode, 0.25);
  CHECK(q == doctest::Approx(bohm_simplified(gap, 0.5, 0.5, 0.25)).epsilon(1e-13));
  CHECK_THROWS_AS(bohm_potential(g, mode, 0.7), DomainError);
}

TEST_CASE("Bohm potential: straight limit") {
  const auto straight = WaveguideGeometry::straight(1.0);
  const ModeIndex mode = make_mode(2, 1, 1);
  const double gap = bessel::j0_zero(2) - bessel::j0_zero(1);
  CHECK(bohm_potential(straight, mode, 0.2) == doctest::Approx(gap * gap).epsilon(1e-14));
  CHECK(bohm_barrier(straight, mode) == doctest::Approx(gap * gap + 4.0 * pi * pi).epsilon(1e-14));
  const double nearly = bohm_barrier(make_geometry(1e6, 1.0), mode);
  CHECK(nearly == doctest::Approx(bohm_barrier(straight, mode)).epsilon(1e-12));
}

TEST_CASE("property: coefficient identity and polynomial vs simplified form") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> radius(0.3, 100.0);
  std::uniform_real_distribution<double> fraction(0.01, 0.95);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double R = radius(rng);
    const auto g = make_geometry(R, 2.0 * R * fraction(rng));
    const ModeIndex mode = make_mode(1 + trial % 3, 1 + trial % 7, 1 + trial % 4);
    const BohmCoefficients c = bohm_coefficients(g, mode);
    const double xi0 = g.half_width();
    REQUIRE(std::abs(c.a1 * c.a1 - 4.0 * c.a2 * (c.a3 - xi0 * xi0)) <= 1e-12 * c.a1 * c.a1);
    const double gap = bessel::j0_zero(mode.l + mode.w) - bessel::j0_zero(mode.l);
    const double xi = xi0 * unit(rng);
    const double expected = bohm_simplified(gap, g.curvature(), xi0, xi);
    REQUIRE(std::abs(bohm_potential(g, mode, xi) - expected) <= 1e-11 * expected);
  }
}

TEST_CASE("sampled Bohm profile") {
  const auto g = make_geometry(2.0, 1.0);
  const PotentialProfile p = sample_bohm_potential(g, make_mode(1, 1, 1), 5);
  CHECK(p.kind == PotentialKind::bohm);
  CHECK(p.size() == 5);
  CHECK_NOTHROW(check_profile(g, p));
}

TEST_CASE("momentum shift variants") {
  for (Variant v : {Variant::paper_literal, Variant::corrected, Variant::exact}) {
    CHECK(momentum_shift(10.0, 0.0, v) == 0.0);
  }
  CHECK(momentum_shift(100.0, 1.0, Variant::exact) == doctest::Approx(10.0 - std::sqrt(99.0)).epsilon(1e-14));
  CHECK(momentum_shift(100.0, 1.0, Variant::exact) == doctest::Approx(0.05013).epsilon(1e-4));
  CHECK(momentum_shift(100.0, 1.0, Variant::corrected) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(momentum_shift(100.0, 1.0, Variant::paper_literal) == doctest::Approx(0.1).epsilon(1e-15));

  const double kappa = 0.3, energy = 40.0;
  CHECK(momentum_shift(energy, kappa * kappa / 4.0, Variant::paper_literal) ==
        doctest::Approx(kappa * kappa / (4.0 * std::sqrt(energy))).epsilon(1e-15));

  CHECK_THROWS_AS(momentum_shift(1.0, 1.0, Variant::exact), DomainError);
  CHECK_THROWS_AS(momentum_shift(1.0, 2.0, Variant::exact), DomainError);
  CHECK_THROWS_AS(momentum_shift(0.0, 0.0, Variant::corrected), DomainError);
  CHECK_NOTHROW(momentum_shift(1.0, 2.0, Variant::paper_literal));
}

TEST_CASE("property: exact shift lies between corrected and paper-literal") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> energy(0.1, 1e4);
  std::uniform_real_distribution<double> fraction(0.0, 0.999);
  for (int i = 0; i < 1000; ++i) {
    const double e = energy(rng);
    const double q = e * fraction(rng);
    const double exact = momentum_shift(e, q, Variant::exact);
    REQUIRE(exact >= 0.0);
    REQUIRE(exact <= momentum_shift(e, q, Variant::paper_literal));
    REQUIRE(exact >= momentum_shift(e, q, Variant::corrected));
  }
}

TEST_CASE("phase shift") {
  const auto g = make_geometry(2.0, 1.0);
  CHECK(phase_shift(g, 0.0, Variant::paper_literal) == 0.0);
  CHECK(phase_shift(g, 0.0, Variant::corrected) == 0.0);

  const double energy = 50.0;
  const double kappa = g.curvature();
  const double dp = momentum_shift(energy, kappa * kappa / 4.0, Variant::paper_literal);
  CHECK(phase_shift(g, dp, Variant::paper_literal) ==
        doctest::Approx(pi * kappa / (4.0 * std::sqrt(energy))).epsilon(1e-14));

  const auto g2 = make_geometry(4.0, 1.0);
  CHECK(phase_shift(g2, 0.3, Variant::paper_literal) ==
        doctest::Approx(2.0 * phase_shift(g, 0.3, Variant::paper_literal)).epsilon(1e-15));

  // hbar enters only the corrected reading
  CHECK(phase_shift(g, 0.3, Variant::paper_literal, 2.0) == phase_shift(g, 0.3, Variant::paper_literal));
  CHECK(phase_shift(g, 0.3, Variant::corrected, 2.0) ==
        doctest::Approx(phase_shift(g, 0.3, Variant::corrected) / 2.0));
  CHECK_THROWS_AS(phase_shift(g, -1.0, Variant::corrected), DomainError);
}

TEST_CASE("minimal phase shift") {
  CHECK(min_phase_shift(2.0, 0.1, Variant::paper_literal) == doctest::Approx(0.025).epsilon(1e-15));
  CHECK(min_phase_shift(2.0, 0.0, Variant::paper_literal) == 0.0);
  CHECK(min_phase_shift(2.0, 0.0, Variant::corrected) == 0.0);
  for (double lambda : {0.01, 1.0, 7.5}) {
    for (double kappa : {1e-4, 0.2, 1.9}) {
      CHECK(min_phase_shift(lambda, kappa, Variant::paper_literal) /
                min_phase_shift(lambda, kappa, Variant::corrected) ==
            doctest::Approx(2.0).epsilon(1e-15));
    }
  }
  CHECK_THROWS_AS(min_phase_shift(0.0, 0.1, Variant::paper_literal), DomainError);
}

TEST_CASE("phase shift grows with curvature and vanishes in the straight limit") {
  const double lambda = 0.5;
  const double energy = std::pow(2.0 * pi / lambda, 2);
  for (Variant v : {Variant::paper_literal, Variant::corrected, Variant::exact}) {
    double previous = 0.0;
    for (double kappa = 1e-6; kappa < 1.5; kappa *= 2.0) {
      const auto g = make_geometry(1.0 / kappa, 1.0);
      const double dp = momentum_shift(energy, kappa * kappa / 4.0, v);
      const double phi = phase_shift(g, dp, v);
      REQUIRE(phi > previous);
      if (kappa < 1e-5) REQUIRE(phi < 1e-6);
      previous = phi;
    }
  }
}

TEST_CASE("predict_phase_shift composes barrier, momentum and phase") {
  const auto g = make_geometry(2.0, 1.0);
  const ModeIndex mode = make_mode(1, 1, 1);
  const PhaseShiftResult r = predict_phase_shift(g, mode, 400.0, Variant::corrected);
  CHECK(r.variant == Variant::corrected);
  CHECK(r.delta_p == doctest::Approx(bohm_barrier(g, mode) / 40.0));
  CHECK(r.delta_phi == doctest::Approx(2.0 * pi * r.delta_p));
  CHECK(parse_variant("paper") == Variant::paper_literal);
  CHECK_THROWS_AS(parse_variant("nope"), DomainError);
}

TEST_CASE("anticentrifugal force") {
  CHECK(anticentrifugal_force(make_geometry(1.0, 1.0)) == 0.5);
  CHECK(anticentrifugal_force(make_geometry(2.0, 1.0)) == 0.0625);
  CHECK(anticentrifugal_force(WaveguideGeometry::straight(1.0)) == 0.0);

  for (double kappa : {0.1, 0.25, 0.5, 1.0, 1.5}) {
    const auto g = make_geometry(1.0 / kappa, 1.0);
    const double step = 1e-6 * g.width();
    const double gradient =
        (effective_potential(g, 1, step) - effective_potential(g, 1, -step)) / (2.0 * step);
    const double centrifugal_gradient =
        (anticentrifugal_potential(g, step) - anticentrifugal_potential(g, -step)) / (2.0 * step);
    CAPTURE(kappa);
    CHECK(std::abs(-centrifugal_gradient - anticentrifugal_force(g)) / anticentrifugal_force(g) < 1e-8);
    CHECK(std::abs(-gradient - anticentrifugal_force(g)) / anticentrifugal_force(g) < 1e-6);
  }
}
