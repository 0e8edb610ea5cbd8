#pragma once

// Brute-force eigenvalues of the radial problem
//
//   -Phi'' + V_eff(xi) Phi = E Phi,   Phi(-xi0) = Phi(+xi0) = 0
//
// with a three-point stencil on a uniform grid and bisection on Sturm counts.
// Shares nothing with the Bessel route beyond V_eff itself.

#include <span>
#include <utility>
#include <vector>

#include "bentguide/geometry.hpp"

namespace bentguide::fd {

/// N interior points, N >= 3 and odd so xi = 0 is a node.
struct FDGrid {
  int N = 0;
  double h = 0.0;
  double xi0 = 0.0;

  double xi(int i) const { return -xi0 + (i + 1) * h; }
};

FDGrid make_grid(const WaveguideGeometry& geom, int N);

/// Symmetric tridiagonal operator with diagonal 2/h^2 + V_i and constant
/// off-diagonal -1/h^2.
struct TridiagonalOperator {
  std::vector<double> potential;
  double coupling = 0.0;  // 1/h^2

  int size() const { return static_cast<int>(potential.size()); }
  double diagonal(int i) const { return 2.0 * coupling + potential[i]; }
  double off_diagonal() const { return -coupling; }
};

TridiagonalOperator build_operator(const WaveguideGeometry& geom, int n, const FDGrid& grid);

/// Gershgorin enclosure [lower, upper] of the spectrum.
std::pair<double, double> gershgorin_bounds(const TridiagonalOperator& op);

/// Number of eigenvalues strictly below lambda.
int sturm_count(const TridiagonalOperator& op, double lambda);

/// k-th smallest eigenvalue (k >= 1) to relative width `rel_tol`.
double bisect_eigenvalue(const TridiagonalOperator& op, int k, double rel_tol = 1e-12);

/// The `count` smallest eigenvalues; n = 0 drops the z confinement term.
std::vector<double> fd_eigenvalues(const WaveguideGeometry& geom, int n, const FDGrid& grid,
                                   int count);

/// Removes the h^2 error term given results at spacings h and h / ratio.
/// ratio = 2 gives (4 E_fine - E_coarse) / 3.
double richardson_extrapolate(double e_coarse, double e_fine, double ratio = 2.0);

/// Grid with N interior points and its exact halving, 2N + 1.
struct ExtrapolatedEigenvalues {
  std::vector<double> coarse;
  std::vector<double> fine;
  std::vector<double> extrapolated;
  int coarse_N = 0;
  int fine_N = 0;
};

ExtrapolatedEigenvalues extrapolated_eigenvalues(const WaveguideGeometry& geom, int n, int N,
                                                 int count);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace bentguide::fd
