#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "heps/grid.hpp"

namespace heps {

/// Square sampling domain [lo, hi]^2.
struct Box {
  double lo = -1.0;
  double hi = 1.0;
};

/// Test functions with known curvature decay, sampled on an n x n grid over the box.
///
/// Names, with optional parameter in parentheses:
///   quadratic(a)             -(a/2)|x|^2, theta = a          (default a = 1)
///   affine                   0.3 x - 0.2 y + 0.1, theta = 0
///   cone                     -|x|, theta = 1/|x|
///   radial_power(beta)       -|x|^beta, beta in (1, 2)      (default 1.5)
///   radial_power_sub(sigma)  -|x|^sigma, sigma in (0, 1)    (default 0.5)
///   double_well              min(|x - p|^2, |x + p|^2), p = (0.3, 0)
///   perturbed_concave(seed)  -|x|^2/2 plus a small seeded trigonometric term, still concave
///
/// Throws InvalidArgument for unknown names (listing the valid ones) or bad parameters.
GridFunction corpus(std::string_view name, int n, Box domain = {});

/// Names accepted by corpus(), in their default-parameter spelling.
std::vector<std::string> corpus_names();

/// Points where a corpus member fails to be C^2 (the origin for the radial family).
std::vector<std::array<double, 2>> corpus_kinks(std::string_view name);

}  // namespace heps
