#include "heps/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "heps/envelope.hpp"
#include "heps/errors.hpp"
#include "heps/extremum.hpp"

namespace heps {

double theta(const GridFunction& u, GridIndex node) {
  if (node.i <= 0 || node.j <= 0 || node.i >= u.nx() - 1 || node.j >= u.ny() - 1) {
    throw InvalidArgument("theta is defined at interior nodes only");
  }
  if (in_contact(u, node, 0.0)) return 0.0;
  const double a_max = 4.0 * (u.max_value() - u.min_value()) / u.cell_area();
  if (!in_contact(u, node, a_max)) return std::numeric_limits<double>::infinity();
  double lo = 0.0;
  double hi = a_max;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (in_contact(u, node, mid) ? hi : lo) = mid;
  }
  return hi > 0.5 * a_max ? std::numeric_limits<double>::infinity() : hi;
}

namespace {

void check_half_ball(const GridFunction& u) {
  if (u.xmin() > -0.5 || u.xmax() < 0.5 || u.ymin() > -0.5 || u.ymax() < 0.5) {
    throw InvalidArgument("grid domain must contain the ball of radius 1/2");
  }
}

}  // namespace

std::vector<double> level_measures(const GridFunction& u, std::span<const double> thresholds) {
  check_half_ball(u);
  std::vector<std::size_t> inside;
  for (int j = 1; j < u.ny() - 1; ++j) {
    for (int i = 1; i < u.nx() - 1; ++i) {
      const double x = u.x(i);
      const double y = u.y(j);
      if (x * x + y * y < 0.25) inside.push_back(u.index(i, j));
    }
  }
  std::vector<double> out;
  out.reserve(thresholds.size());
  for (double t : thresholds) {
    if (!(t > 0.0)) throw InvalidArgument("level thresholds must be positive");
    const ContactSet cs = contact_set(u, t);
    std::size_t kept = 0;
    for (std::size_t k : inside) {
      if (!cs.mask[k]) inside[kept++] = k;
    }
    inside.resize(kept);
    out.push_back(static_cast<double>(kept) * u.cell_area());
  }
  return out;
}

double level_measure(const GridFunction& u, double t) {
  const double ts[1] = {t};
  return level_measures(u, ts).front();
}

DecayFit decay_fit(const GridFunction& u, double t0, double ratio, int count) {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw InvalidArgument("t0 must be positive");
  if (!(ratio > 1.0) || !std::isfinite(ratio)) throw InvalidArgument("ratio must exceed 1");
  if (count < 4) throw InvalidArgument("decay fit needs at least 4 thresholds");

  DecayFit fit;
  for (int k = 0; k < count; ++k) fit.thresholds.push_back(t0 * std::pow(ratio, k));
  fit.measures = level_measures(u, fit.thresholds);

  const double floor = kDecayCellFloor * u.cell_area();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (int k = 0; k < count; ++k) {
    const bool ok = fit.measures[k] >= floor;
    fit.used.push_back(ok);
    if (!ok) continue;
    const double lx = std::log(fit.thresholds[k]);
    const double ly = std::log(fit.measures[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++used;
  }
  if (used < 2) {
    throw InvalidArgument("decay fit: fewer than 2 thresholds above the " +
                          std::to_string(static_cast<int>(kDecayCellFloor)) + "-cell floor");
  }
  const double mx = sx / used;
  const double my = sy / used;
  const double vxx = sxx / used - mx * mx;
  const double vxy = sxy / used - mx * my;
  fit.slope = vxy / vxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (int k = 0; k < count; ++k) {
    if (!fit.used[k]) continue;
    const double ly = std::log(fit.measures[k]);
    const double pred = fit.intercept + fit.slope * std::log(fit.thresholds[k]);
    ss_res += (ly - pred) * (ly - pred);
    ss_tot += (ly - my) * (ly - my);
  }
  fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
  return fit;
}

DecayFit decay_fit(const GridFunction& u, double t0, const Ellipticity& ell, int count) {
  const double ratio = intrinsic_ratio(ell);
  if (!std::isfinite(ratio)) throw InvalidArgument("intrinsic ratio is infinite at tau = 1");
  return decay_fit(u, t0, ratio, count);
}

}  // namespace heps
