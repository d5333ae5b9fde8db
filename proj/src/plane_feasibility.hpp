#pragma once

#include <span>

namespace heps::detail {

/// Constraint ax * px + ay * py <= b.
struct HalfPlane {
  double ax;
  double ay;
  double b;
};

/// Whether some slope p satisfies every constraint (up to round-off), by
/// Seidel's randomized incremental method with a fixed shuffle seed.
/// `spacing` is the smallest nonzero |(ax, ay)|; it bounds feasible slopes.
bool plane_feasible(std::span<const HalfPlane> rows, double spacing);

}  // namespace heps::detail
