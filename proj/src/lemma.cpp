#include "heps/lemma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "heps/envelope.hpp"
#include "heps/errors.hpp"
#include "heps/parallel.hpp"

namespace heps {

namespace {

SymMatrix2 discrete_hessian(const GridFunction& u, int i, int j) {
  const double h2 = u.cell_area();
  const double c = u(i, j);
  return {(u(i + 1, j) - 2.0 * c + u(i - 1, j)) / h2,
          (u(i + 1, j + 1) - u(i + 1, j - 1) - u(i - 1, j + 1) + u(i - 1, j - 1)) / (4.0 * h2),
          (u(i, j + 1) - 2.0 * c + u(i, j - 1)) / h2};
}

void check_opening(double a, double delta) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("opening a must be positive");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw InvalidArgument("delta must be positive");
}

// Candidate touching nodes are those on the lower hull of u + (b/2)|x|^2, which
// is contained in the contact set at opening b; minimising over that subset in
// row-major order gives the same argmin (and tie-break) as a full scan.
std::vector<GridIndex> slide(const GridFunction& u, const GridFunction& env_a, double b,
                             const ContactSet& mask_b, std::span<const GridIndex> family) {
  std::vector<std::size_t> candidates;
  std::vector<double> lifted;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!mask_b.mask[k]) continue;
    const GridIndex g = u.node(k);
    const double x = u.x(g.i);
    const double y = u.y(g.j);
    candidates.push_back(k);
    lifted.push_back(u[k] + 0.5 * b * (x * x + y * y));
  }
  const double inv2h = 0.5 / u.h();
  std::vector<GridIndex> out(family.size());
  parallel_for(family.size(), [&](std::size_t f) {
    const GridIndex g = family[f];
    const double gx = (env_a(g.i + 1, g.j) - env_a(g.i - 1, g.j)) * inv2h;
    const double gy = (env_a(g.i, g.j + 1) - env_a(g.i, g.j - 1)) * inv2h;
    const double sx = gx + b * u.x(g.i);
    const double sy = gy + b * u.y(g.j);
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const GridIndex n = u.node(candidates[c]);
      const double v = lifted[c] - sx * u.x(n.i) - sy * u.y(n.j);
      if (v < best) {
        best = v;
        arg = candidates[c];
      }
    }
    out[f] = u.node(arg);
  });
  return out;
}

void check_family(const GridFunction& u, const ContactSet& mask_a,
                  std::span<const GridIndex> family) {
  for (const GridIndex& g : family) {
    if (g.i < 0 || g.j < 0 || g.i >= u.nx() || g.j >= u.ny()) {
      throw InvalidArgument("family node outside the grid");
    }
    if (mask_a(g.i, g.j)) {
      throw InvalidArgument("family node (" + std::to_string(g.i) + ", " + std::to_string(g.j) +
                            ") is in the contact set at opening a");
    }
  }
}

}  // namespace

double supersolution_check(const GridFunction& u, const Ellipticity& ell,
                           const std::vector<bool>& exclude) {
  if (!exclude.empty() && exclude.size() != u.size()) {
    throw InvalidArgument("exclusion mask size does not match the grid");
  }
  std::size_t total = 0;
  std::size_t good = 0;
  for (int j = 1; j < u.ny() - 1; ++j) {
    for (int i = 1; i < u.nx() - 1; ++i) {
      if (!exclude.empty() && exclude[u.index(i, j)]) continue;
      const SymMatrix2 hess = discrete_hessian(u, i, j);
      const double scale = std::max(1.0, hess.max_norm());
      ++total;
      if (pucci_minus(hess, ell) <= 1e-6 * scale) ++good;
    }
  }
  return total == 0 ? 1.0 : static_cast<double>(good) / static_cast<double>(total);
}

std::vector<bool> kink_exclusion(const GridFunction& u,
                                 std::span<const std::array<double, 2>> kinks) {
  std::vector<bool> out(u.size(), false);
  const double h = u.h();
  for (std::size_t k = 0; k < u.size(); ++k) {
    const GridIndex g = u.node(k);
    for (const auto& p : kinks) {
      if (std::abs(u.x(g.i) - p[0]) <= h * (1.0 + 1e-9) &&
          std::abs(u.y(g.j) - p[1]) <= h * (1.0 + 1e-9)) {
        out[k] = true;
      }
    }
  }
  return out;
}

std::vector<GridIndex> noncontact_family(const GridFunction& u, double a) {
  const ContactSet cs = contact_set(u, a);
  std::vector<GridIndex> out;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!cs.mask[k]) out.push_back(u.node(k));
  }
  return out;
}

std::vector<GridIndex> touching_points(const GridFunction& u, double a, double delta,
                                       std::span<const GridIndex> family) {
  check_opening(a, delta);
  const GridFunction env_a = a_envelope(u, a);
  const ContactSet mask_a = contact_set_from(u, env_a, a);
  check_family(u, mask_a, family);
  const double b = (1.0 + delta) * a;
  return slide(u, env_a, b, contact_set(u, b), family);
}

std::vector<GridIndex> interior_family(const GridFunction& u, double a, double delta) {
  const std::vector<GridIndex> all = noncontact_family(u, a);
  const std::vector<GridIndex> touch = touching_points(u, a, delta, all);
  std::vector<GridIndex> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (u.boundary_distance(touch[k].i, touch[k].j) >= 2) out.push_back(all[k]);
  }
  return out;
}

LemmaCheckReport lemma_check(const GridFunction& u, const Ellipticity& ell, double a, double delta,
                             std::span<const GridIndex> family) {
  check_opening(a, delta);
  const double b = (1.0 + delta) * a;
  const GridFunction env_a = a_envelope(u, a);
  const ContactSet mask_a = contact_set_from(u, env_a, a);
  const ContactSet mask_b = contact_set(u, b);
  check_family(u, mask_a, family);

  LemmaCheckReport r;
  r.a = a;
  r.delta = delta;
  r.c = c_of(ell);
  r.family_size = family.size();
  r.measure_F = static_cast<double>(family.size()) * u.cell_area();

  std::size_t fresh = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (mask_b.mask[k] && !mask_a.mask[k]) ++fresh;
  }
  r.measure_new_contact = static_cast<double>(fresh) * u.cell_area();
  const double factor = 1.0 / ((1.0 + 1.0 / delta) * (1.0 + 1.0 / delta));
  r.bound = r.c * factor * r.measure_F;

  std::vector<bool> seen(u.size(), false);
  r.interior_ok = true;
  for (const GridIndex& t : slide(u, env_a, b, mask_b, family)) {
    if (u.boundary_distance(t.i, t.j) < 2) r.interior_ok = false;
    const std::size_t k = u.index(t);
    if (!seen[k]) {
      seen[k] = true;
      ++r.touching_count;
    }
  }
  r.slack = static_cast<double>(r.touching_count) * u.cell_area();
  r.satisfied = r.measure_new_contact >= r.bound - r.slack;
  return r;
}

LemmaCheckReport lemma_check(const GridFunction& u, const Ellipticity& ell, double a,
                             double delta) {
  const std::vector<GridIndex> family = noncontact_family(u, a);
  return lemma_check(u, ell, a, delta, family);
}

}  // namespace heps
