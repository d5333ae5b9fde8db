#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "heps/ellipticity.hpp"
#include "heps/grid.hpp"

namespace heps {

/// Fraction of interior nodes where the minimal Pucci operator of the centred
/// second-difference Hessian is <= 1e-6 * (largest Hessian entry, at least 1).
/// Nodes flagged in `exclude` (row-major, may be empty) are skipped.
double supersolution_check(const GridFunction& u, const Ellipticity& ell,
                           const std::vector<bool>& exclude = {});

/// Nodes whose 3x3 stencil box [x - h, x + h] x [y - h, y + h] contains a kink point.
std::vector<bool> kink_exclusion(const GridFunction& u, std::span<const std::array<double, 2>> kinks);

/// Outcome of sliding paraboloids of opening (1 + delta) a from the envelope up to u.
struct LemmaCheckReport {
  double a = 0.0;
  double delta = 0.0;
  double c = 0.0;                    ///< c_of(ell)
  std::size_t family_size = 0;       ///< |F| in nodes
  std::size_t touching_count = 0;    ///< distinct touching nodes
  double measure_F = 0.0;
  double measure_new_contact = 0.0;  ///< |A_{(1+delta)a}(u) \ A_a(u)|
  double bound = 0.0;                ///< c (1 + 1/delta)^-2 |F|
  double slack = 0.0;                ///< one cell per touching node
  bool satisfied = false;            ///< measure_new_contact >= bound - slack
  bool interior_ok = false;          ///< every touching node is >= 2h from the boundary
};

/// Nodes where u lies strictly above its envelope of opening a: {u > Gamma_a}.
std::vector<GridIndex> noncontact_family(const GridFunction& u, double a);

/// Touching node for each family node: the paraboloid of opening (1 + delta) a
/// tangent to Gamma_a (slope from its centred gradient) is lifted by
/// min(u - P); the argmin, first in row-major order on ties, is returned.
std::vector<GridIndex> touching_points(const GridFunction& u, double a, double delta,
                                       std::span<const GridIndex> family);

/// Members of noncontact_family(u, a) whose touching node is at least 2h from
/// the boundary, i.e. the part of {u > Gamma_a} for which the touching set stays
/// compactly inside the box.
std::vector<GridIndex> interior_family(const GridFunction& u, double a, double delta);

/// Discrete check of |A_{(1+delta)a} \ A_a| >= c (1 + 1/delta)^-2 |F|.
/// Throws InvalidArgument if a or delta is not positive or if F has a node in contact at a.
LemmaCheckReport lemma_check(const GridFunction& u, const Ellipticity& ell, double a, double delta,
                             std::span<const GridIndex> family);

/// lemma_check with F = noncontact_family(u, a).
LemmaCheckReport lemma_check(const GridFunction& u, const Ellipticity& ell, double a, double delta);

}  // namespace heps
