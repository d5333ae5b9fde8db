#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "heps/ellipticity.hpp"
#include "heps/grid.hpp"

namespace heps {

/// Smallest opening A >= 0 for which the node lies in contact_set(u, A): the
/// discrete lower curvature function. Bisects 60 times on [0, 4 range(u) / h^2];
/// returns +infinity when no resolvable opening touches. Throws InvalidArgument
/// for boundary nodes.
double theta(const GridFunction& u, GridIndex node);

/// h^2 * #{interior nodes with |x| < 1/2 and theta > t}. A node has theta > t
/// exactly when it lies outside contact_set(u, t), so one envelope per threshold
/// suffices. Throws InvalidArgument if the box does not contain B_{1/2}.
double level_measure(const GridFunction& u, double t);

/// level_measure at increasing thresholds, forced nonincreasing: a node counts at
/// t_k only if it counted at every earlier threshold.
std::vector<double> level_measures(const GridFunction& u, std::span<const double> thresholds);

/// Power-law fit |{theta > t} ∩ B_{1/2}| ~ C t^slope.
struct DecayFit {
  std::vector<double> thresholds;
  std::vector<double> measures;
  std::vector<bool> used;  ///< measure above the 25-cell floor
  double slope = 0.0;      ///< -epsilon_hat
  double intercept = 0.0;  ///< ln C
  double r_squared = 0.0;

  double exponent() const noexcept { return -slope; }
};

/// Cells a level set must cover before it enters the fit.
inline constexpr double kDecayCellFloor = 25.0;

/// Fits log(measure) against log(t) on t_k = t0 ratio^k, k < count.
/// Throws InvalidArgument for t0 <= 0, ratio <= 1, count < 4, or when fewer than
/// two thresholds clear the floor.
DecayFit decay_fit(const GridFunction& u, double t0, double ratio, int count);

/// decay_fit with the intrinsic dyadic ratio 1 / (1 - x_c) of the given ellipticity.
DecayFit decay_fit(const GridFunction& u, double t0, const Ellipticity& ell, int count);

}  // namespace heps
