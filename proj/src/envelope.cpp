#include "heps/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heps/errors.hpp"
#include "lower_hull.hpp"
#include "plane_feasibility.hpp"

namespace heps {

namespace {

std::vector<double> lifted(const GridFunction& u, double a) {
  std::vector<double> w(u.values().begin(), u.values().end());
  if (a == 0.0) return w;
  for (int j = 0; j < u.ny(); ++j) {
    const double y = u.y(j);
    for (int i = 0; i < u.nx(); ++i) {
      const double x = u.x(i);
      w[u.index(i, j)] += 0.5 * a * (x * x + y * y);
    }
  }
  return w;
}

void check_opening(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw InvalidArgument("opening must be finite and >= 0");
}

}  // namespace

GridFunction convex_envelope(const GridFunction& v) {
  return v.with_values(detail::lattice_lower_hull(v.nx(), v.ny(), v.values()));
}

GridFunction a_envelope(const GridFunction& u, double a) {
  check_opening(a);
  const std::vector<double> w = lifted(u, a);
  std::vector<double> env = detail::lattice_lower_hull(u.nx(), u.ny(), w);
  for (int j = 0; j < u.ny(); ++j) {
    const double y = u.y(j);
    for (int i = 0; i < u.nx(); ++i) {
      const std::size_t k = u.index(i, j);
      if (u.on_boundary(i, j)) {
        env[k] = u[k];
      } else {
        const double x = u.x(i);
        env[k] = std::min(u[k], env[k] - 0.5 * a * (x * x + y * y));
      }
    }
  }
  return u.with_values(std::move(env));
}

double contact_tolerance(const GridFunction& u, double a) noexcept {
  const double umax = std::max(std::abs(u.min_value()), std::abs(u.max_value()));
  const double rx = std::max(std::abs(u.xmin()), std::abs(u.xmax()));
  const double ry = std::max(std::abs(u.ymin()), std::abs(u.ymax()));
  return 1e-11 * (1.0 + umax + 0.5 * a * (rx * rx + ry * ry));
}

std::size_t ContactSet::count() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

ContactSet contact_set_from(const GridFunction& u, const GridFunction& envelope, double a) {
  ContactSet cs;
  cs.opening = a;
  cs.tol = contact_tolerance(u, a);
  cs.nx = u.nx();
  cs.ny = u.ny();
  cs.mask.resize(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) cs.mask[k] = u[k] - envelope[k] <= cs.tol;
  return cs;
}

ContactSet contact_set(const GridFunction& u, double a) {
  return contact_set_from(u, a_envelope(u, a), a);
}

bool in_contact(const GridFunction& u, GridIndex node, double a) {
  check_opening(a);
  if (node.i < 0 || node.j < 0 || node.i >= u.nx() || node.j >= u.ny()) {
    throw InvalidArgument("node outside the grid");
  }
  if (u.on_boundary(node.i, node.j)) return true;
  const double tol = contact_tolerance(u, a);
  const double x0 = u.x(node.i);
  const double y0 = u.y(node.j);
  const double w0 = u(node.i, node.j) + 0.5 * a * (x0 * x0 + y0 * y0) - tol;
  // Plane z = w0 + p.(x - x0) must stay below the lifted data: p.d_k <= w_k - w0.
  std::vector<detail::HalfPlane> rows;
  rows.reserve(u.size());
  for (int j = 0; j < u.ny(); ++j) {
    const double y = u.y(j);
    for (int i = 0; i < u.nx(); ++i) {
      const double x = u.x(i);
      const double w = u(i, j) + 0.5 * a * (x * x + y * y);
      rows.push_back({x - x0, y - y0, w - w0});
    }
  }
  return detail::plane_feasible(rows, u.h());
}

GridFunction inf_convolution(const GridFunction& u, double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("inf-convolution weight must be > 0");
  const double step = m * u.h() * u.h();
  const int nx = u.nx();
  const int ny = u.ny();
  std::vector<double> out(u.values().begin(), u.values().end());

  // out[q] = min_p f[p] + step (q - p)^2 along one line, via the lower envelope of parabolas.
  std::vector<double> f, env;
  std::vector<int> vtx;
  std::vector<double> cut;
  auto pass = [&](int len) {
    vtx.assign(len, 0);
    cut.assign(len + 1, 0.0);
    env.assign(len, 0.0);
    int k = 0;
    vtx[0] = 0;
    cut[0] = -std::numeric_limits<double>::infinity();
    cut[1] = std::numeric_limits<double>::infinity();
    for (int q = 1; q < len; ++q) {
      double s;
      while (true) {
        const int p = vtx[k];
        s = ((f[q] + step * q * q) - (f[p] + step * double(p) * p)) / (2.0 * step * (q - p));
        if (s > cut[k]) break;
        --k;
      }
      ++k;
      vtx[k] = q;
      cut[k] = s;
      cut[k + 1] = std::numeric_limits<double>::infinity();
    }
    k = 0;
    for (int q = 0; q < len; ++q) {
      while (cut[k + 1] < q) ++k;
      const double d = q - vtx[k];
      env[q] = f[vtx[k]] + step * d * d;
    }
  };

  f.resize(nx);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) f[i] = out[u.index(i, j)];
    pass(nx);
    for (int i = 0; i < nx; ++i) out[u.index(i, j)] = std::min(env[i], f[i]);
  }
  f.resize(ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) f[j] = out[u.index(i, j)];
    pass(ny);
    for (int j = 0; j < ny; ++j) out[u.index(i, j)] = std::min(env[j], f[j]);
  }
  return u.with_values(std::move(out));
}

}  // namespace heps
