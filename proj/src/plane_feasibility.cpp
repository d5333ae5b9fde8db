#include "plane_feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace heps::detail {

namespace {

double slack(const HalfPlane& r, double px, double py) {
  return 1e-12 * (1.0 + std::abs(r.b) + std::abs(r.ax * px) + std::abs(r.ay * py));
}

}  // namespace

bool plane_feasible(std::span<const HalfPlane> rows, double spacing) {
  double bmax = 0.0;
  for (const HalfPlane& r : rows) bmax = std::max(bmax, std::abs(r.b));
  // Neighbouring nodes at distance `spacing` cap any feasible slope by bmax / spacing.
  const double box = 2.0 * bmax / spacing + 1.0;

  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(0x5eed1e55u);
  std::shuffle(order.begin(), order.end(), rng);

  // Maximize a generic direction so the optimum is a unique vertex.
  const double cx = 1.0;
  const double cy = 0.6180339887498949;
  double px = box;
  double py = box;

  for (std::size_t n = 0; n < order.size(); ++n) {
    const HalfPlane& r = rows[order[n]];
    if (r.ax * px + r.ay * py <= r.b + slack(r, px, py)) continue;
    const double norm2 = r.ax * r.ax + r.ay * r.ay;
    if (norm2 == 0.0) return false;  // 0 <= b violated
    // Optimum moves onto the line r: p = p0 + t dir.
    const double x0 = r.ax * r.b / norm2;
    const double y0 = r.ay * r.b / norm2;
    const double norm = std::sqrt(norm2);
    const double dx = -r.ay / norm;
    const double dy = r.ax / norm;
    double tlo = -std::numeric_limits<double>::infinity();
    double thi = std::numeric_limits<double>::infinity();
    auto clip = [&](double ax, double ay, double b) {
      const double along = ax * dx + ay * dy;
      const double at0 = ax * x0 + ay * y0;
      const double tol = 1e-12 * (1.0 + std::abs(b) + std::abs(at0));
      if (std::abs(along) <= 1e-14 * (std::abs(ax) + std::abs(ay))) {
        return at0 <= b + tol;
      }
      const double t = (b - at0) / along;
      if (along > 0.0) {
        thi = std::min(thi, t + tol / along);
      } else {
        tlo = std::max(tlo, t + tol / along);
      }
      return true;
    };
    bool ok = clip(1.0, 0.0, box) && clip(-1.0, 0.0, box) && clip(0.0, 1.0, box) &&
              clip(0.0, -1.0, box);
    for (std::size_t m = 0; ok && m < n; ++m) {
      const HalfPlane& q = rows[order[m]];
      ok = clip(q.ax, q.ay, q.b);
    }
    if (!ok || tlo > thi) return false;
    const double t = (cx * dx + cy * dy) > 0.0 ? thi : tlo;
    px = x0 + t * dx;
    py = y0 + t * dy;
  }
  return true;
}

}  // namespace heps::detail
