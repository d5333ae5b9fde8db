#include "heps/extremum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "heps/errors.hpp"

namespace heps {

namespace {

// The searches run in y = -ln(1 - x), which keeps 1 - x = exp(-y) exact for
// maximizers crowding x = 1.
struct Complement {
  double x;
  double one_minus_x;
  double y;
};

Complement from_y(double y) { return {-std::expm1(-y), std::exp(-y), y}; }

void check_c(double c) {
  if (!(c > 0.0) || !(c <= 1.0)) throw InvalidArgument("c must lie in (0, 1]");
}

void check_n(int n) {
  if (n < 2) throw InvalidArgument("dimension n must be at least 2");
}

double value_at(const Complement& p, double c, int n) {
  return std::log1p(-c * std::pow(p.x, n)) / -p.y;
}

double slope_sign_at(const Complement& p, double c, int n) {
  const double cxn = c * std::pow(p.x, n);
  return n * c * std::pow(p.x, n - 1) * p.y * p.one_minus_x + std::log1p(-cxn) * (1.0 - cxn);
}

void fill_residuals(CriticalPoint& cp, double one_minus_x) {
  const double x = cp.x_c;
  const double d = cp.d_c;
  cp.residual_value = 1.0 - cp.c * std::pow(x, cp.n) - std::pow(one_minus_x, d);
  cp.residual_slope =
      cp.n * cp.c * std::pow(x, cp.n - 1) - d * std::pow(one_minus_x, d - 1.0);
}

constexpr double kYMin = 1e-9;
constexpr double kYMax = 36.0;  // 1 - x = 2.3e-16
constexpr double kGoldenWidth = 1e-6;

// Bisection on a sign change, positive at lo and negative at hi, down to adjacent doubles.
template <class SignFn>
double bisect_sign(SignFn&& sign, double lo, double hi) {
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (sign(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double critical_function(double x, double c, int n) {
  if (!(x > 0.0) || !(x < 1.0)) throw InvalidArgument("critical_function needs x in (0, 1)");
  check_c(c);
  check_n(n);
  const double cxn = c * std::pow(x, n);
  if (!(cxn < 1.0)) throw InvalidArgument("critical_function needs c x^n < 1");
  return std::log1p(-cxn) / std::log1p(-x);
}

double critical_slope_sign(double x, double c, int n) {
  if (!(x > 0.0) || !(x < 1.0)) throw InvalidArgument("critical_slope_sign needs x in (0, 1)");
  check_c(c);
  check_n(n);
  return slope_sign_at({x, 1.0 - x, -std::log1p(-x)}, c, n);
}

M0Result m0(int n) {
  check_n(n);
  // Stationarity of x^n / y reads n (1 - x) y = x; positive to the left of the peak.
  auto stationarity = [n](double y) {
    const Complement p = from_y(y);
    return n * p.one_minus_x * y - p.x;
  };
  const double y = bisect_sign(stationarity, kYMin, kYMax);
  const Complement p = from_y(y);
  return {std::pow(p.x, n) / y, p.x};
}

CriticalPoint solve_system(double c, int n) {
  check_c(c);
  check_n(n);
  CriticalPoint cp;
  cp.c = c;
  cp.n = n;
  if (c == 1.0) {
    cp.x_c = 1.0;
    cp.d_c = 1.0;
    cp.boundary_flag = true;
    return cp;
  }

  auto f = [&](double y) { return value_at(from_y(y), c, n); };
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = kYMin;
  double b = kYMax;
  double y1 = b - inv_phi * (b - a);
  double y2 = a + inv_phi * (b - a);
  double f1 = f(y1);
  double f2 = f(y2);
  int iterations = 0;
  while (b - a > kGoldenWidth) {
    if (++iterations > 200) throw SolverError("golden-section search did not converge", a, b);
    if (f1 < f2) {
      a = y1;
      y1 = y2;
      f1 = f2;
      y2 = a + inv_phi * (b - a);
      f2 = f(y2);
    } else {
      b = y2;
      y2 = y1;
      f2 = f1;
      y1 = b - inv_phi * (b - a);
      f1 = f(y1);
    }
  }

  auto sign = [&](double y) { return slope_sign_at(from_y(y), c, n); };
  double lo = a;
  double hi = b;
  for (int grow = 0; grow < 40 && !(sign(lo) > 0.0 && sign(hi) < 0.0); ++grow) {
    const double w = hi - lo;
    lo = std::max(kYMin, lo - w);
    hi = std::min(kYMax, hi + w);
  }
  if (!(sign(lo) > 0.0 && sign(hi) < 0.0)) {
    throw SolverError("slope sign change not bracketed for c=" + std::to_string(c), lo, hi);
  }
  const double y = bisect_sign(sign, lo, hi);
  const Complement p = from_y(y);
  cp.x_c = p.x;
  cp.d_c = value_at(p, c, n);
  fill_residuals(cp, p.one_minus_x);
  return cp;
}

CriticalPoint newton_system(double c, double x, double d, int iterations) {
  check_c(c);
  CriticalPoint cp;
  cp.c = c;
  cp.n = 2;
  for (int it = 0; it < iterations; ++it) {
    const double om = 1.0 - x;
    const double lg = std::log(om);
    const double pd = std::pow(om, d);
    const double pd1 = std::pow(om, d - 1.0);
    const double f1 = 1.0 - c * x * x - pd;
    const double f2 = 2.0 * c * x - d * pd1;
    const double j11 = -2.0 * c * x + d * pd1;
    const double j12 = -pd * lg;
    const double j21 = 2.0 * c + d * (d - 1.0) * std::pow(om, d - 2.0);
    const double j22 = -pd1 - d * pd1 * lg;
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) break;
    const double dx = (f1 * j22 - f2 * j12) / det;
    const double dd = (j11 * f2 - j21 * f1) / det;
    double nx = x - dx;
    if (nx <= 0.0) nx = 0.5 * x;
    if (nx >= 1.0) nx = 0.5 * (x + 1.0);
    x = nx;
    d -= dd;
    if (std::abs(dx) < 1e-16 && std::abs(dd) < 1e-16) break;
  }
  cp.x_c = x;
  cp.d_c = d;
  fill_residuals(cp, 1.0 - x);
  return cp;
}

double x_c_closed_form(double d, double c) {
  check_c(c);
  if (!(d > 0.0) || !(d <= 1.0)) throw InvalidArgument("d must lie in (0, 1]");
  const double disc = 1.0 - (d / c) * (2.0 - d);
  if (disc < 0.0) {
    throw InvalidArgument("negative discriminant: (d, c) is not a tangency pair");
  }
  return (1.0 + std::sqrt(disc)) / (2.0 - d);
}

double psi(double c) { return solve_system(c).d_c / c; }

double lower_bound_opt(const Ellipticity& ell) { return solve_system(c_of(ell)).d_c; }

double interp_anchor() {
  static const double anchor = [] {
    const double m = m0(2).value;
    return 0.5 * (1.0 + std::sqrt(1.0 - 2.0 * m));
  }();
  return anchor;
}

double interp_point(const Ellipticity& ell, double exponent) {
  if (ell.degenerate() || c_of(ell) >= 1.0) {
    throw InvalidArgument("interpolation point is singular at tau = 1");
  }
  const double x0 = interp_anchor();
  return x0 + (1.0 - x0) * std::pow(c_of(ell), exponent);
}

double lower_bound_interp(const Ellipticity& ell, double exponent) {
  return critical_function(interp_point(ell, exponent), c_of(ell), 2);
}

double intrinsic_ratio(const Ellipticity& ell) {
  const CriticalPoint cp = solve_system(c_of(ell));
  if (cp.boundary_flag) return std::numeric_limits<double>::infinity();
  return 1.0 / (1.0 - cp.x_c);
}

BoundReport bound_report(const Ellipticity& ell, double exponent) {
  BoundReport r;
  r.tau = ell.tau();
  r.c = c_of(ell);
  r.eps_upper = upper_bound_ass(ell);
  if (ell.degenerate() || r.c >= 1.0) {
    r.eps_lower_opt = 1.0;
    r.eps_lower_interp = 1.0;
  } else {
    r.eps_lower_opt = solve_system(r.c).d_c;
    r.eps_lower_interp = lower_bound_interp(ell, exponent);
  }
  r.ratio = r.eps_lower_opt / r.eps_upper;
  constexpr double slack = 1e-9;
  if (r.eps_lower_interp > r.eps_lower_opt + slack || r.eps_lower_opt > r.eps_upper + slack ||
      !(r.ratio > 0.81) || r.ratio > 1.0 + slack) {
    throw std::logic_error("bound ordering violated at tau=" + std::to_string(r.tau));
  }
  return r;
}

}  // namespace heps
