#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "heps/corpus.hpp"
#include "heps/envelope.hpp"
#include "heps/errors.hpp"

using namespace heps;

namespace {

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

GridFunction square(int n, auto f) { return GridFunction::sample(n, n, -1.0, -1.0, 2.0 / (n - 1), f); }

}  // namespace

TEST_CASE("paraboloid evaluation") {
  const Paraboloid p{2.0, {1.0, -1.0}, 0.5};
  CHECK(p(1.0, 2.0) == -5.0 + 1.0 - 2.0 + 0.5);
}

TEST_CASE("convex input is a fixed point") {
  const GridFunction v = square(65, [](double x, double y) { return 0.5 * (x * x + y * y); });
  CHECK(max_abs_diff(convex_envelope(v).values(), v.values()) <= 1e-10);
}

TEST_CASE("double well envelope matches the supporting-plane oracle") {
  const GridFunction v = corpus("double_well", 33);
  const GridFunction env = convex_envelope(v);
  CHECK(max_abs_diff(env.values(), oracle::convex_envelope_lp(v)) <= 1e-6);
  // Flat bridge: along y = 0 between the wells the envelope is the interpolated
  // well floor, far below the ridge value 0.09 at the origin.
  const GridIndex mid = v.nearest(0.0, 0.0);
  CHECK(v(mid.i, mid.j) == doctest::Approx(0.09));
  CHECK(env(mid.i, mid.j) < 0.01);
}

TEST_CASE("envelope of a concave function only sees the boundary") {
  const GridFunction u = corpus("quadratic(1)", 33);
  // Raise the interior: the boundary is unchanged and so must be the envelope.
  std::vector<double> lifted(u.values().begin(), u.values().end());
  for (int j = 1; j < 32; ++j) {
    for (int i = 1; i < 32; ++i) lifted[u.index(i, j)] += 0.3 + 0.01 * i;
  }
  const GridFunction a = convex_envelope(u);
  const GridFunction b = convex_envelope(u.with_values(lifted));
  CHECK(max_abs_diff(a.values(), b.values()) <= 1e-12);
  CHECK(max_abs_diff(a.values(), oracle::convex_envelope_lp(u)) <= 1e-6);
  for (int j = 1; j < 32; ++j) {
    for (int i = 1; i < 32; ++i) CHECK(a(i, j) < u(i, j));
  }
}

TEST_CASE("a-envelope") {
  SUBCASE("paraboloid of the same opening is its own envelope") {
    for (double a : {0.5, 1.0, 4.0}) {
      const GridFunction u = square(33, [a](double x, double y) { return -0.5 * a * (x * x + y * y); });
      CHECK(max_abs_diff(a_envelope(u, a).values(), u.values()) <= 1e-12);
    }
  }
  SUBCASE("insufficient opening stays strictly below in the interior") {
    const GridFunction u = square(33, [](double x, double y) { return -(x * x + y * y); });
    const GridFunction env = a_envelope(u, 1.0);
    for (int j = 0; j < 33; ++j) {
      for (int i = 0; i < 33; ++i) {
        if (u.on_boundary(i, j)) {
          CHECK(env(i, j) == u(i, j));
        } else {
          CHECK(env(i, j) < u(i, j) - 1e-6);
        }
      }
    }
  }
  SUBCASE("matches the lifted supporting-plane oracle") {
    const GridFunction u = corpus("cone", 33);
    const double a = 3.0;
    const GridFunction lifted = GridFunction::sample(
        33, 33, -1, -1, 2.0 / 32, [&](double x, double y) { return -std::hypot(x, y) + 0.5 * a * (x * x + y * y); });
    const auto hull = oracle::convex_envelope_lp(lifted);
    const GridFunction env = a_envelope(u, a);
    for (std::size_t k = 0; k < u.size(); ++k) {
      const GridIndex g = u.node(k);
      const double x = u.x(g.i), y = u.y(g.j);
      const double expect = u.on_boundary(g.i, g.j) ? u[k] : std::min(u[k], hull[k] - 0.5 * a * (x * x + y * y));
      CHECK(env[k] == doctest::Approx(expect).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(a_envelope(corpus("cone", 9), -1.0), InvalidArgument);
}

TEST_CASE("cone contact at opening 4 is the complement of the disk of radius 1/4") {
  const GridFunction u = corpus("cone", 129);
  const ContactSet cs = contact_set(u, 4.0);
  const double h = u.h();
  for (int j = 1; j < 128; ++j) {
    for (int i = 1; i < 128; ++i) {
      const double r = std::hypot(u.x(i), u.y(j));
      if (r > 0.25 + 2 * h) CHECK(cs(i, j));
      if (r < 0.25 - 2 * h) CHECK_FALSE(cs(i, j));
    }
  }
}

TEST_CASE("contact sets of the quadratic") {
  const GridFunction u = corpus("quadratic(1)", 33);
  const ContactSet full = contact_set(u, 1.0);
  CHECK(full.count() == u.size());
  const ContactSet none = contact_set(u, 0.5);
  for (int j = 1; j < 32; ++j) {
    for (int i = 1; i < 32; ++i) CHECK_FALSE(none(i, j));
  }
  CHECK(none.count() == 4 * 32);
  CHECK(none.tol == contact_tolerance(u, 0.5));
}

TEST_CASE("single-node contact test agrees with the envelope mask") {
  for (const char* name : {"cone", "double_well", "radial_power(1.5)", "perturbed_concave(2)"}) {
    const GridFunction u = corpus(name, 21);
    for (double a : {0.0, 0.7, 2.0, 9.0}) {
      const ContactSet cs = contact_set(u, a);
      for (std::size_t k = 0; k < u.size(); ++k) {
        CAPTURE(name);
        CAPTURE(a);
        CAPTURE(k);
        CHECK(in_contact(u, u.node(k), a) == static_cast<bool>(cs.mask[k]));
      }
    }
  }
}

TEST_CASE("inf-convolution") {
  SUBCASE("exact against the brute-force minimum") {
    for (const char* name : {"cone", "double_well", "radial_power_sub(0.5)"}) {
      const GridFunction u = corpus(name, 33);
      for (double m : {0.3, 2.0, 40.0}) {
        CHECK(max_abs_diff(inf_convolution(u, m).values(), oracle::inf_convolution_brute(u, m)) <= 1e-12);
      }
    }
  }
  SUBCASE("cone shifts down by 1/(4m) away from the tip") {
    const GridFunction u = corpus("cone", 129);
    const double m = 4.0;
    const GridFunction um = inf_convolution(u, m);
    const double tol = m * u.cell_area() + 1e-12;
    for (std::size_t k = 0; k < u.size(); ++k) {
      const GridIndex g = u.node(k);
      const double r = std::hypot(u.x(g.i), u.y(g.j));
      // The minimizer sits 1/(2m) further out along the ray; it must stay in the box.
      const double stretch = r > 0 ? 1.0 + 1.0 / (2 * m * r) : 0.0;
      if (r >= 1.0 / (2 * m) && std::abs(u.x(g.i)) * stretch <= 1.0 && std::abs(u.y(g.j)) * stretch <= 1.0) {
        CHECK(std::abs(um[k] - (u[k] - 1.0 / (4 * m))) <= tol);
      }
    }
  }
  SUBCASE("convex quadratic contracts by 2m/(2m+1)") {
    const GridFunction u = corpus("quadratic(1)", 129);
    const GridFunction v = u.with_values([&] {
      std::vector<double> w(u.values().begin(), u.values().end());
      for (auto& x : w) x = -x;
      return w;
    }());
    for (double m : {1.0, 3.0}) {
      const GridFunction um = inf_convolution(v, m);
      const double f = 2 * m / (2 * m + 1);
      for (std::size_t k = 0; k < v.size(); ++k) {
        const GridIndex g = v.node(k);
        if (std::abs(v.x(g.i)) <= 0.5 && std::abs(v.y(g.j)) <= 0.5) {
          CHECK(std::abs(um[k] - f * v[k]) <= m * v.cell_area());
        }
      }
    }
  }
  SUBCASE("large weight is nearly the identity") {
    const GridFunction u = corpus("cone", 65);
    const GridFunction um = inf_convolution(u, 1e8);
    CHECK(max_abs_diff(um.values(), u.values()) <= 1.0 / (4e8) + u.h());
  }
  CHECK_THROWS_AS(inf_convolution(corpus("cone", 9), 0.0), InvalidArgument);
}
