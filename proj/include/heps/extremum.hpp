#pragma once

#include "heps/ellipticity.hpp"

namespace heps {

/// ln(1 - c x^n) / ln(1 - x): the lower estimate for the integrability exponent
/// produced by dyadic openings of ratio 1/(1 - x).
///
/// Throws InvalidArgument for x outside (0, 1), c outside (0, 1], n < 2, or c x^n >= 1.
double critical_function(double x, double c, int n = 2);

/// Sign-carrying numerator of d/dx critical_function, scaled by the positive
/// factor (1 - x)(1 - c x^n) ln(1 - x)^2 / (-ln(1 - x)). Positive left of the maximizer.
double critical_slope_sign(double x, double c, int n = 2);

struct M0Result {
  double value;      ///< sup over (0,1) of x^n / (-ln(1 - x))
  double maximizer;  ///< the x attaining it
};

/// sup_(0,1) x^n / (-ln(1-x)), via bisection on n(1-x)(-ln(1-x)) = x.
M0Result m0(int n);

/// Solution of the tangency system 1 - c x^2 = (1-x)^d, 2 c x = d (1-x)^(d-1).
struct CriticalPoint {
  double c = 0.0;
  int n = 2;
  double x_c = 0.0;
  double d_c = 0.0;
  double residual_value = 0.0;
  double residual_slope = 0.0;
  /// True when c = 1: the supremum 1 is approached only as x -> 1.
  bool boundary_flag = false;
};

/// Maximizes critical_function(., c, n) on (0, 1).
///
/// The search runs in y = -ln(1 - x) so that maximizers near x = 1 stay resolved:
/// golden-section brackets the peak, then bisection on the analytic slope sign
/// polishes it to adjacent doubles. For n = 2 the residuals refer to the tangency
/// system; for other n the slope residual uses n c x^(n-1). Throws SolverError if
/// the bracket does not contain a sign change.
CriticalPoint solve_system(double c, int n = 2);

/// Newton iteration on the raw two-equation system, started from (x, d). Used to
/// cross-check solve_system; returns the refined point with its residuals.
CriticalPoint newton_system(double c, double x, double d, int iterations = 50);

/// x_c = (1 + sqrt(1 - (d/c)(2 - d))) / (2 - d). Throws InvalidArgument on a negative
/// discriminant, i.e. when (d, c) cannot come from the tangency system.
double x_c_closed_form(double d, double c);

/// psi(c) = d_c / c.
double psi(double c);

/// Optimized lower bound: sup_x critical_function(x, c_of(ell), 2).
double lower_bound_opt(const Ellipticity& ell);

/// x0 = (1 + sqrt(1 - 2 m0(2))) / 2, the small-c limit of x_c.
double interp_anchor();

/// Default exponent of c(tau) in the interpolation point.
inline constexpr double kInterpExponent = 2.4;

/// t(tau) = x0 + (1 - x0) c(tau)^exponent. Throws InvalidArgument at tau = 1.
double interp_point(const Ellipticity& ell, double exponent = kInterpExponent);

/// critical_function(t(tau), c(tau), 2). Throws InvalidArgument at tau = 1.
double lower_bound_interp(const Ellipticity& ell, double exponent = kInterpExponent);

/// Dyadic opening ratio 1 + delta* = 1 / (1 - x_c) at the given ellipticity.
/// Infinite at tau = 1.
double intrinsic_ratio(const Ellipticity& ell);

struct BoundReport {
  double tau = 0.0;
  double c = 0.0;
  double eps_lower_opt = 0.0;
  double eps_lower_interp = 0.0;
  double eps_upper = 0.0;
  double ratio = 0.0;
};

/// All two-sided bounds at one ellipticity. At tau = 1 both lower bounds are 1.
/// Throws std::logic_error if the computed bounds break their ordering.
BoundReport bound_report(const Ellipticity& ell, double exponent = kInterpExponent);

}  // namespace heps
