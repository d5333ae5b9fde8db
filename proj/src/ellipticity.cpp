#include "heps/ellipticity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heps/errors.hpp"

namespace heps {

Ellipticity::Ellipticity(double lambda, double Lambda) : lambda_(lambda), Lambda_(Lambda) {
  if (!std::isfinite(lambda) || !std::isfinite(Lambda) || !(lambda > 0.0) || !(lambda <= Lambda)) {
    throw InvalidArgument("ellipticity requires 0 < lambda <= Lambda (got lambda=" +
                          std::to_string(lambda) + ", Lambda=" + std::to_string(Lambda) + ")");
  }
}

Ellipticity Ellipticity::from_ratio(double tau) {
  if (!(tau > 0.0) || !(tau <= 1.0)) {
    throw InvalidArgument("ellipticity ratio must lie in (0, 1]");
  }
  return Ellipticity(tau, 1.0);
}

double SymMatrix2::max_norm() const noexcept {
  return std::max({std::abs(a11), std::abs(a12), std::abs(a22)});
}

std::array<double, 2> SymMatrix2::eigenvalues() const noexcept {
  const double mean = 0.5 * (a11 + a22);
  const double radius = std::hypot(0.5 * (a11 - a22), a12);
  return {mean - radius, mean + radius};
}

double c_of(const Ellipticity& ell) noexcept {
  const double tau = ell.tau();
  return 4.0 * tau / ((1.0 + tau) * (1.0 + tau));
}

double upper_bound_ass(const Ellipticity& ell) noexcept {
  const double tau = ell.tau();
  return 2.0 * tau / (1.0 + tau);
}

double upper_bound_ndim(int n, const Ellipticity& ell) {
  if (n < 2) throw InvalidArgument("dimension must be at least 2");
  const double tau = ell.tau();
  return n * tau / ((n - 1) + tau);
}

namespace {

// Splits the spectrum into (sum of positive, sum of negative) eigenvalues.
// Eigenvalues below 1e-14 of the matrix scale count as zero.
std::array<double, 2> signed_spectrum(const SymMatrix2& m) noexcept {
  const double cutoff = 1e-14 * m.max_norm();
  double pos = 0.0;
  double neg = 0.0;
  for (double e : m.eigenvalues()) {
    if (std::abs(e) <= cutoff) continue;
    (e > 0.0 ? pos : neg) += e;
  }
  return {pos, neg};
}

}  // namespace

double pucci_minus(const SymMatrix2& m, const Ellipticity& ell) noexcept {
  const auto [pos, neg] = signed_spectrum(m);
  return ell.lambda() * pos + ell.Lambda() * neg;
}

double pucci_plus(const SymMatrix2& m, const Ellipticity& ell) noexcept {
  const auto [pos, neg] = signed_spectrum(m);
  return ell.Lambda() * pos + ell.lambda() * neg;
}

}  // namespace heps
