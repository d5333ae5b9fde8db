#pragma once

#include <span>
#include <vector>

namespace heps::detail {

/// Values at every lattice node of the lower convex hull of the lifted points
/// (i, j, z[j * nx + i]), i.e. the discrete convex envelope in index coordinates.
///
/// Exact up to the final barycentric evaluation: hull topology is decided with
/// exact orientation predicates on the integer lattice.
std::vector<double> lattice_lower_hull(int nx, int ny, std::span<const double> z);

/// Sign of the orientation determinant of four lifted lattice points
/// (xk, yk, zk), with exact arithmetic. Positive when d lies on the side of the
/// plane (a, b, c) that (b - a) x (c - a) points to.
int orient_lifted(const long long (&x)[4], const long long (&y)[4], const double (&z)[4]);

}  // namespace heps::detail
