#pragma once

// Cylinder functions of order 0 and 1 for real non-negative arguments, the
// zeros of J0, and the zeros of the cross product
//
//   f(eps) = J0(eps mu_in) Y0(eps mu_out) - J0(eps mu_out) Y0(eps mu_in)
//
// which quantize Dirichlet modes of the annulus mu_in < mu < mu_out.
//
// Evaluation uses three branches:
//   x <= kSeriesLimit              ascending power series
//   kSeriesLimit < x < kHankelLimit  Miller backward recurrence for J_k,
//                                    Neumann series for Y0 and Y1
//   x >= kHankelLimit              Hankel asymptotic expansion
// Adjacent branches agree to ~1e-15 on their shared boundary.

#include <vector>

namespace bentguide::bessel {

inline constexpr double kSeriesLimit = 5.0;
inline constexpr double kHankelLimit = 20.0;

/// J_order(x), order 0 or 1, x >= 0.
double bessel_j(int order, double x);

/// Y_order(x), order 0 or 1, x > 0.
double bessel_y(int order, double x);

struct CylinderValues {
  double j0;
  double j1;
  double y0;
  double y1;
};

/// All four functions at once; cheaper than four separate calls.
CylinderValues cylinder(double x);

/// l-th positive zero of J0 (l >= 1).
double j0_zero(int l);

/// McMahon expansion of the l-th J0 zero; initial guess for j0_zero.
double mcmahon_j0_zero(int l);

struct ZeroTable {
  int order = 0;
  std::vector<double> zeros;

  int count() const { return static_cast<int>(zeros.size()); }
  /// 1-based, matching the zero index l.
  double operator[](int l) const { return zeros.at(static_cast<std::size_t>(l - 1)); }
};

ZeroTable j0_zero_table(int count);

/// The cross-product function f(eps) above.
double cross_product(double eps, double mu_in, double mu_out);

/// k-th positive root of cross_product (k >= 1).
double cross_product_zero(double mu_in, double mu_out, int k);

/// The first `count` positive roots, ascending.
std::vector<double> cross_product_zeros(double mu_in, double mu_out, int count);

namespace detail {

CylinderValues series(double x);
CylinderValues miller(double x);
CylinderValues hankel(double x);

}  // namespace detail

}  // namespace bentguide::bessel
