#include "bentguide/oracle_fd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bentguide/errors.hpp"

namespace bentguide::fd {

FDGrid make_grid(const WaveguideGeometry& geom, int N) {
  if (N < 3 || N % 2 == 0) throw DomainError("FD grid needs an odd N >= 3, got " + std::to_string(N));
  FDGrid grid;
  grid.N = N;
  grid.h = geom.width() / (N + 1);
  grid.xi0 = geom.half_width();
  return grid;
}

TridiagonalOperator build_operator(const WaveguideGeometry& geom, int n, const FDGrid& grid) {
  TridiagonalOperator op;
  op.coupling = 1.0 / (grid.h * grid.h);
  op.potential.resize(static_cast<std::size_t>(grid.N));
  for (int i = 0; i < grid.N; ++i) op.potential[i] = effective_potential(geom, n, grid.xi(i));
  return op;
}

std::pair<double, double> gershgorin_bounds(const TridiagonalOperator& op) {
  const auto [lo, hi] = std::minmax_element(op.potential.begin(), op.potential.end());
  // diagonal 2c + V_i with at most two off-diagonal entries of magnitude c
  return {*lo, *hi + 4.0 * op.coupling};
}

int sturm_count(const TridiagonalOperator& op, double lambda) {
  // Pivots q_i = d_i - lambda - c^2 / q_{i-1}. With r_i = q_i / c and
  // s_i = r_i - 1 the recurrence becomes
  //   s_i = (V_i - lambda) / c + s_{i-1} / (1 + s_{i-1}),
  // which never forms 2c - lambda and keeps small shifts resolved when c is
  // large. The count is the number of negative pivots r_i = 1 + s_i.
  const double c = op.coupling;
  const double guard = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double s = 0.0;
  for (int i = 0; i < op.size(); ++i) {
    const double g = (op.potential[i] - lambda) / c;
    if (i == 0) {
      s = 1.0 + g;
    } else {
      double pivot = 1.0 + s;
      if (std::abs(pivot) < guard) pivot = -guard;
      s = g + s / pivot;
    }
    // a pivot inside the guard band is treated as -guard, hence negative
    if (1.0 + s < guard) ++count;
  }
  return count;
}

double bisect_eigenvalue(const TridiagonalOperator& op, int k, double rel_tol) {
  if (k < 1 || k > op.size()) throw DomainError("eigenvalue index out of range");
  auto [lo, hi] = gershgorin_bounds(op);
  const double abs_floor = std::numeric_limits<double>::min();
  for (int iter = 0; iter < 400; ++iter) {
    const double width = hi - lo;
    if (width <= rel_tol * std::max(std::abs(lo), std::abs(hi)) + abs_floor) break;
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(op, mid) >= k) hi = mid;
    else lo = mid;
  }
  return lo + 0.5 * (hi - lo);
}

std::vector<double> fd_eigenvalues(const WaveguideGeometry& geom, int n, const FDGrid& grid,
                                   int count) {
  if (count < 1) throw DomainError("eigenvalue count must be >= 1");
  if (count > grid.N) throw DomainError("cannot request more eigenvalues than grid points");
  const TridiagonalOperator op = build_operator(geom, n, grid);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) values.push_back(bisect_eigenvalue(op, k));
  return values;
}

double richardson_extrapolate(double e_coarse, double e_fine, double ratio) {
  if (ratio == 2.0) return (4.0 * e_fine - e_coarse) / 3.0;
  const double r2 = ratio * ratio;
  return (r2 * e_fine - e_coarse) / (r2 - 1.0);
}

ExtrapolatedEigenvalues extrapolated_eigenvalues(const WaveguideGeometry& geom, int n, int N,
                                                 int count) {
  ExtrapolatedEigenvalues out;
  out.coarse_N = N;
  out.fine_N = 2 * N + 1;  // h / 2 exactly: (2N + 2) intervals
  out.coarse = fd_eigenvalues(geom, n, make_grid(geom, out.coarse_N), count);
  out.fine = fd_eigenvalues(geom, n, make_grid(geom, out.fine_N), count);
  out.extrapolated.resize(out.coarse.size());
  for (std::size_t i = 0; i < out.coarse.size(); ++i) {
    out.extrapolated[i] = richardson_extrapolate(out.coarse[i], out.fine[i]);
  }
  return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("slope fit needs >= 2 paired points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("log-log fit needs positive data");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace bentguide::fd
