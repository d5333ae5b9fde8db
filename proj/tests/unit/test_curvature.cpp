#include <doctest.h>

#include <cmath>
#include <limits>

#include "heps/corpus.hpp"
#include "heps/curvature.hpp"
#include "heps/envelope.hpp"
#include "heps/errors.hpp"

using namespace heps;

TEST_CASE("theta of the quadratic and affine functions") {
  const GridFunction q = corpus("quadratic(1)", 65);
  const GridFunction q3 = corpus("quadratic(3)", 65);
  const GridFunction aff = corpus("affine", 65);
  for (auto p : {std::pair{0.0, 0.0}, {0.25, 0.25}, {-0.6, 0.1}, {0.9, -0.9}}) {
    const GridIndex g = q.nearest(p.first, p.second);
    CHECK(theta(q, g) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(theta(q3, g) == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(theta(aff, g) == 0.0);
  }
  CHECK_THROWS_AS(theta(q, GridIndex{0, 5}), InvalidArgument);
}

TEST_CASE("theta of the cone is the inverse radius") {
  const GridFunction u = corpus("cone", 129);
  for (double r : {0.1, 0.2, 0.3, 0.4}) {
    for (double ang : {0.0, 0.5, 2.0}) {
      const GridIndex g = u.nearest(r * std::cos(ang), r * std::sin(ang));
      const double rr = std::hypot(u.x(g.i), u.y(g.j));
      CAPTURE(rr);
      CHECK(theta(u, g) * rr == doctest::Approx(1.0).epsilon(0.05));
    }
  }
}

TEST_CASE("an upward spike needs the opening 2 s / h^2") {
  std::vector<double> v(9 * 9, 0.0);
  v[4 * 9 + 4] = 0.5;
  const GridFunction u(9, 9, -1, -1, 0.25, v);
  CHECK(theta(u, GridIndex{4, 4}) == doctest::Approx(2 * 0.5 / 0.0625).epsilon(1e-9));
  CHECK(theta(u, GridIndex{2, 2}) == 0.0);
}

TEST_CASE("level measures") {
  const GridFunction q = corpus("quadratic(1)", 129);
  CHECK(level_measure(q, 2.0) == 0.0);
  const GridFunction cone = corpus("cone", 257);
  CHECK(level_measure(cone, 4.0) == doctest::Approx(M_PI / 16).epsilon(0.10));
  CHECK(level_measure(cone, 1.0) == doctest::Approx(M_PI / 4).epsilon(0.10));
  const double ts[] = {1.0, 2.0, 4.0, 8.0};
  const auto ms = level_measures(cone, ts);
  for (std::size_t k = 1; k < ms.size(); ++k) CHECK(ms[k] <= ms[k - 1]);
  const GridFunction tiny = GridFunction::sample(9, 9, 0.0, 0.0, 0.1, [](double, double) { return 0.0; });
  CHECK_THROWS_AS(level_measure(tiny, 1.0), InvalidArgument);
}

TEST_CASE("decay fit") {
  const GridFunction cone = corpus("cone", 257);
  const DecayFit fit = decay_fit(cone, 2.0, 2.0, 5);
  CHECK(fit.thresholds.size() == 5);
  CHECK(fit.thresholds[4] == 32.0);
  CHECK(fit.exponent() == doctest::Approx(2.0).epsilon(0.1));
  CHECK(fit.r_squared > 0.99);
  CHECK(fit.r_squared <= 1.0);
  for (std::size_t k = 1; k < fit.measures.size(); ++k) CHECK(fit.measures[k] <= fit.measures[k - 1]);

  // Thresholds beyond the floor do not enter the fit.
  const DecayFit sparse = decay_fit(cone, 2.0, 4.0, 6);
  CHECK_FALSE(sparse.used.back());

  const GridFunction q = corpus("quadratic(1)", 65);
  CHECK_THROWS_WITH_AS(decay_fit(q, 2.0, 2.0, 5), doctest::Contains("fewer than 2"), InvalidArgument);
  CHECK_THROWS_AS(decay_fit(cone, 2.0, 2.0, 3), InvalidArgument);
  CHECK_THROWS_AS(decay_fit(cone, 2.0, 1.0, 5), InvalidArgument);
  CHECK_THROWS_AS(decay_fit(cone, -1.0, 2.0, 5), InvalidArgument);
  CHECK_THROWS_AS(decay_fit(cone, 2.0, Ellipticity(1, 1), 5), InvalidArgument);
}
