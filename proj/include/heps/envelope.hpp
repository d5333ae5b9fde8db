#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "heps/grid.hpp"

namespace heps {

/// P(x) = -(a/2)|x|^2 + slope . x + intercept, a paraboloid of opening -a.
struct Paraboloid {
  double opening = 0.0;
  std::array<double, 2> slope{0.0, 0.0};
  double intercept = 0.0;

  double operator()(double x, double y) const noexcept {
    return -0.5 * opening * (x * x + y * y) + slope[0] * x + slope[1] * y + intercept;
  }
};

/// Largest convex minorant of the sampled data: the lower convex hull of the
/// points (x_k, v_k) evaluated at every node. Output <= v with equality exactly
/// at hull vertices.
GridFunction convex_envelope(const GridFunction& v);

/// Lower envelope of paraboloids of opening -a, computed as
/// conv(u + (a/2)|x|^2) - (a/2)|x|^2. Values on the boundary of the box are
/// pinned to u. Throws InvalidArgument for a < 0.
GridFunction a_envelope(const GridFunction& u, double a);

/// Tolerance separating contact from non-contact at opening a. The envelope is
/// exact, so this only absorbs round-off in u + (a/2)|x|^2:
/// 1e-11 (1 + max|u| + (a/2) max|x|^2).
double contact_tolerance(const GridFunction& u, double a) noexcept;

/// Nodes where u has a tangent paraboloid of opening -a from below, up to tol.
struct ContactSet {
  double opening = 0.0;
  double tol = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<bool> mask;  ///< row-major, aligned with the grid

  bool operator()(int i, int j) const { return mask[static_cast<std::size_t>(j) * nx + i]; }
  std::size_t count() const;
};

/// Contact set from a precomputed envelope; `envelope` must be a_envelope(u, a).
ContactSet contact_set_from(const GridFunction& u, const GridFunction& envelope, double a);

/// mask = (u - a_envelope(u, a) <= contact_tolerance(u, a)).
ContactSet contact_set(const GridFunction& u, double a);

/// Whether one interior node belongs to contact_set(u, a), decided without
/// building the whole envelope: a two-variable linear feasibility problem for the
/// slope of a supporting plane of u + (a/2)|x|^2 lowered by the tolerance.
bool in_contact(const GridFunction& u, GridIndex node, double a);

/// Moreau-type lower envelope u_m(x) = min over grid nodes y of u(y) + m|y - x|^2,
/// computed exactly by separable lower envelopes of parabolas. Throws for m <= 0.
GridFunction inf_convolution(const GridFunction& u, double m);

}  // namespace heps
