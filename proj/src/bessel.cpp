#include "bentguide/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bentguide/errors.hpp"

namespace bentguide::bessel {
namespace {

using std::numbers::egamma;
using std::numbers::pi;

constexpr double kTiny = 1e-17;

void require_nonnegative(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("Bessel argument must be finite and non-negative, got " + std::to_string(x));
  }
}

void require_positive(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("Y_n argument must be finite and positive, got " + std::to_string(x));
  }
}

void require_order(int order) {
  if (order != 0 && order != 1) throw DomainError("only orders 0 and 1 are supported");
}

// J-only branch selection; avoids the log for x = 0.
double j_only(int order, double x) {
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  const CylinderValues v = cylinder(x);
  return order == 0 ? v.j0 : v.j1;
}

}  // namespace

namespace detail {

CylinderValues series(double x) {
  const double t = 0.25 * x * x;
  const double log_term = std::log(0.5 * x) + egamma;

  // term0_k = (-t)^k / (k!)^2,  term1_k = (-t)^k / (k! (k+1)!)
  double term0 = 1.0;
  double term1 = 1.0;
  double sum_j0 = 1.0;
  double sum_j1 = 1.0;
  double harmonic = 0.0;       // H_k
  double sum_y0 = 0.0;         // sum_{k>=1} H_k term0_k
  double sum_y1 = 1.0;         // sum_{k>=0} (H_k + H_{k+1}) term1_k, k = 0 gives 1
  for (int k = 1; k < 200; ++k) {
    term0 *= -t / (static_cast<double>(k) * k);
    term1 *= -t / (static_cast<double>(k) * (k + 1));
    harmonic += 1.0 / k;
    const double harmonic_next = harmonic + 1.0 / (k + 1);
    sum_j0 += term0;
    sum_j1 += term1;
    sum_y0 += harmonic * term0;
    sum_y1 += (harmonic + harmonic_next) * term1;
    if (std::abs(term0) < kTiny * 1e-2 && std::abs(term1) < kTiny * 1e-2 && k > 2) break;
  }

  CylinderValues v{};
  v.j0 = sum_j0;
  v.j1 = 0.5 * x * sum_j1;
  v.y0 = (2.0 / pi) * (log_term * v.j0 - sum_y0);
  // Y1 = -2/(pi x) + (2/pi) ln(x/2) J1 - (x/2pi) sum (psi(k+1) + psi(k+2)) term1_k
  const double psi_sum = sum_y1 - 2.0 * egamma * sum_j1;
  v.y1 = -2.0 / (pi * x) + (2.0 / pi) * std::log(0.5 * x) * v.j1 - x / (2.0 * pi) * psi_sum;
  return v;
}

CylinderValues miller(double x) {
  // Backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1} from an even start
  // index well past x, normalized by J0 + 2 sum J_{2k} = 1.
  const int start = 2 * static_cast<int>(std::ceil((1.5 * x + 40.0) / 2.0));
  std::vector<double> j(static_cast<std::size_t>(start) + 2, 0.0);
  j[start] = 1e-30;
  for (int k = start; k >= 1; --k) {
    j[k - 1] = (2.0 * k / x) * j[k] - j[k + 1];
    if (std::abs(j[k - 1]) > 1e250) {
      for (int i = k - 1; i <= start; ++i) j[i] *= 1e-250;
    }
  }
  double norm = j[0];
  for (int k = 2; k <= start; k += 2) norm += 2.0 * j[k];
  for (double& value : j) value /= norm;

  const double log_term = std::log(0.5 * x) + egamma;
  double sum_y0 = 0.0;
  double sum_y1 = 0.0;
  for (int k = 1; 2 * k + 1 <= start; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum_y0 += sign * j[2 * k] / k;
    sum_y1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k;
  }

  CylinderValues v{};
  v.j0 = j[0];
  v.j1 = j[1];
  v.y0 = (2.0 / pi) * (log_term * v.j0 - 2.0 * sum_y0);
  v.y1 = -2.0 / (pi * x) * v.j0 + (2.0 / pi) * (log_term * v.j1 + sum_y1);
  return v;
}

CylinderValues hankel(double x) {
  // P and Q of the Hankel expansion for mu = 4 nu^2, nu in {0, 1}.
  auto pq = [x](double mu, double& p, double& q) {
    p = 1.0;
    q = 0.0;
    double term = 1.0;
    double previous = 1.0;
    for (int k = 1; k < 200; ++k) {
      const double odd = 2.0 * k - 1.0;
      term *= (mu - odd * odd) / (k * 8.0 * x);
      const double magnitude = std::abs(term);
      if (magnitude > previous) break;  // asymptotic series starts to diverge
      previous = magnitude;
      const int phase = k % 4;  // k = 1: +Q, 2: -P, 3: -Q, 4: +P
      if (phase == 1) q += term;
      else if (phase == 2) p -= term;
      else if (phase == 3) q -= term;
      else p += term;
      if (magnitude < 1e-18) break;
    }
  };

  double p0, q0, p1, q1;
  pq(0.0, p0, q0);
  pq(4.0, p1, q1);

  const double c = std::cos(x);
  const double s = std::sin(x);
  const double root_half = std::numbers::sqrt2 / 2.0;
  // chi0 = x - pi/4, chi1 = x - 3pi/4
  const double cos_chi0 = (c + s) * root_half;
  const double sin_chi0 = (s - c) * root_half;
  const double cos_chi1 = (s - c) * root_half;
  const double sin_chi1 = -(s + c) * root_half;
  const double amplitude = std::sqrt(2.0 / (pi * x));

  CylinderValues v{};
  v.j0 = amplitude * (p0 * cos_chi0 - q0 * sin_chi0);
  v.y0 = amplitude * (p0 * sin_chi0 + q0 * cos_chi0);
  v.j1 = amplitude * (p1 * cos_chi1 - q1 * sin_chi1);
  v.y1 = amplitude * (p1 * sin_chi1 + q1 * cos_chi1);
  return v;
}

}  // namespace detail

CylinderValues cylinder(double x) {
  require_positive(x);
  if (x <= kSeriesLimit) return detail::series(x);
  if (x < kHankelLimit) return detail::miller(x);
  return detail::hankel(x);
}

double bessel_j(int order, double x) {
  require_order(order);
  require_nonnegative(x);
  return j_only(order, x);
}

double bessel_y(int order, double x) {
  require_order(order);
  require_positive(x);
  const CylinderValues v = cylinder(x);
  return order == 0 ? v.y0 : v.y1;
}

double mcmahon_j0_zero(int l) {
  if (l < 1) throw DomainError("zero index l must be >= 1");
  const double beta = (l - 0.25) * pi;
  const double b8 = 8.0 * beta;
  const double b8_2 = b8 * b8;
  return beta + 1.0 / b8 - 124.0 / (3.0 * b8 * b8_2) + 120928.0 / (15.0 * b8 * b8_2 * b8_2);
}

double j0_zero(int l) {
  if (l < 1) throw DomainError("zero index l must be >= 1");
  // The l-th zero lies in ((l - 1/4) pi, (l - 1/8) pi).
  double lo = (l - 0.25) * pi;
  double hi = (l - 0.125) * pi;
  double f_lo = bessel_j(0, lo);
  const double f_hi = bessel_j(0, hi);
  if (f_lo * f_hi > 0.0) {
    throw ConvergenceError("J0 zero " + std::to_string(l) + " not bracketed");
  }

  double x = std::clamp(mcmahon_j0_zero(l), lo, hi);
  for (int iter = 0; iter < 100; ++iter) {
    const CylinderValues v = cylinder(x);
    if (v.j0 == 0.0) return x;
    if ((v.j0 > 0.0) == (f_lo > 0.0)) {
      lo = x;
      f_lo = v.j0;
    } else {
      hi = x;
    }
    // J0' = -J1
    double next = x + v.j0 / v.j1;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    const double resolution = 4.0 * std::numeric_limits<double>::epsilon() * x;
    if (step <= std::max(1e-13, resolution) || hi - lo <= resolution) {
      return x;
    }
  }
  throw ConvergenceError("J0 zero " + std::to_string(l) + " did not converge");
}

ZeroTable j0_zero_table(int count) {
  if (count < 1) throw DomainError("zero table needs count >= 1");
  ZeroTable table;
  table.zeros.reserve(static_cast<std::size_t>(count));
  for (int l = 1; l <= count; ++l) table.zeros.push_back(j0_zero(l));
  return table;
}

namespace {

void require_annulus(double mu_in, double mu_out) {
  if (!(mu_in > 0.0) || !(mu_out > mu_in) || !std::isfinite(mu_out)) {
    throw DomainError("cross product requires 0 < mu_in < mu_out");
  }
}

struct CrossValue {
  double f;
  double df;
};

CrossValue cross_value(double eps, double mu_in, double mu_out) {
  const CylinderValues a = cylinder(eps * mu_in);
  const CylinderValues b = cylinder(eps * mu_out);
  CrossValue out{};
  out.f = a.j0 * b.y0 - b.j0 * a.y0;
  out.df = -mu_in * a.j1 * b.y0 - mu_out * a.j0 * b.y1 + mu_out * b.j1 * a.y0 + mu_in * b.j0 * a.y1;
  return out;
}

double refine_cross_root(double lo, double hi, double f_lo, double mu_in, double mu_out) {
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const CrossValue v = cross_value(x, mu_in, mu_out);
    if (v.f == 0.0) return x;
    if ((v.f > 0.0) == (f_lo > 0.0)) {
      lo = x;
      f_lo = v.f;
    } else {
      hi = x;
    }
    double next = (v.df != 0.0) ? x - v.f / v.df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 2.0 * std::numeric_limits<double>::epsilon() * x ||
        hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * x) {
      return x;
    }
  }
  throw ConvergenceError("cross-product root refinement did not converge");
}

}  // namespace

double cross_product(double eps, double mu_in, double mu_out) {
  require_annulus(mu_in, mu_out);
  if (!(eps > 0.0)) throw DomainError("cross product requires eps > 0");
  return cross_value(eps, mu_in, mu_out).f;
}

std::vector<double> cross_product_zeros(double mu_in, double mu_out, int count) {
  require_annulus(mu_in, mu_out);
  if (count < 1) throw DomainError("root count must be >= 1");

  // Roots are spaced by ~pi / (mu_out - mu_in); an eighth of that (capped at
  // pi / 8) cannot step over a pair.
  const double width = mu_out - mu_in;
  const double step = std::min(pi / width, pi) / 8.0;
  const double limit = (count + 4.0) * pi / width + 64.0 * step;

  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(count));
  double lo = 0.5 * step;
  double f_lo = cross_value(lo, mu_in, mu_out).f;
  while (static_cast<int>(roots.size()) < count) {
    const double hi = lo + step;
    if (hi > limit) {
      throw ConvergenceError("cross-product roots not bracketed below eps = " + std::to_string(limit));
    }
    const double f_hi = cross_value(hi, mu_in, mu_out).f;
    if (f_hi == 0.0) {
      roots.push_back(hi);
    } else if ((f_lo > 0.0) != (f_hi > 0.0) && f_lo != 0.0) {
      roots.push_back(refine_cross_root(lo, hi, f_lo, mu_in, mu_out));
    }
    lo = hi;
    f_lo = f_hi;
  }
  return roots;
}

double cross_product_zero(double mu_in, double mu_out, int k) {
  if (k < 1) throw DomainError("root index k must be >= 1");
  return cross_product_zeros(mu_in, mu_out, k).back();
}

}  // namespace bentguide::bessel
