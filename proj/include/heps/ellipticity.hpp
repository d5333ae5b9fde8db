#pragma once

#include <array>

namespace heps {

/// Ellipticity constants 0 < lambda <= Lambda of a uniformly elliptic operator.
///
/// The degenerate pair lambda == Lambda is admitted and corresponds to tau = 1.
class Ellipticity {
 public:
  /// Throws InvalidArgument unless 0 < lambda <= Lambda and both are finite.
  Ellipticity(double lambda, double Lambda);

  /// Builds the pair (tau, 1) for an ellipticity ratio tau in (0, 1].
  static Ellipticity from_ratio(double tau);

  double lambda() const noexcept { return lambda_; }
  double Lambda() const noexcept { return Lambda_; }
  /// lambda / Lambda, in (0, 1].
  double tau() const noexcept { return lambda_ / Lambda_; }
  bool degenerate() const noexcept { return lambda_ == Lambda_; }

 private:
  double lambda_;
  double Lambda_;
};

/// Entries of a real symmetric 2x2 matrix [[a11, a12], [a12, a22]].
struct SymMatrix2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;

  static SymMatrix2 identity() { return {1.0, 0.0, 1.0}; }
  static SymMatrix2 diag(double d1, double d2) { return {d1, 0.0, d2}; }

  double trace() const noexcept { return a11 + a22; }
  double max_norm() const noexcept;
  SymMatrix2 operator-() const noexcept { return {-a11, -a12, -a22}; }

  /// Eigenvalues in ascending order from the closed 2x2 formula.
  std::array<double, 2> eigenvalues() const noexcept;
};

/// Constant of the planar measure estimate: [1 + (Lambda/4 lambda)(1 - lambda/Lambda)^2]^-1,
/// which equals 4 tau / (1 + tau)^2.
double c_of(const Ellipticity& ell) noexcept;

/// Planar upper bound 2 / (Lambda/lambda + 1) on the exponent.
double upper_bound_ass(const Ellipticity& ell) noexcept;

/// Dimensional upper bound n / ((n - 1) Lambda/lambda + 1); throws for n < 2.
double upper_bound_ndim(int n, const Ellipticity& ell);

/// Minimal Pucci operator: lambda * (positive eigenvalues) + Lambda * (negative eigenvalues).
double pucci_minus(const SymMatrix2& m, const Ellipticity& ell) noexcept;

/// Maximal Pucci operator: Lambda * (positive eigenvalues) + lambda * (negative eigenvalues).
double pucci_plus(const SymMatrix2& m, const Ellipticity& ell) noexcept;

}  // namespace heps
