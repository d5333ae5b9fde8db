#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "heps/corpus.hpp"
#include "heps/envelope.hpp"
#include "heps/errors.hpp"
#include "heps/lemma.hpp"

using namespace heps;

TEST_CASE("supersolution check on quadratics") {
  const GridFunction concave = corpus("quadratic(1)", 33);
  for (double Lam : {1.0, 3.0, 10.0}) CHECK(supersolution_check(concave, Ellipticity(1, Lam)) == 1.0);
  const GridFunction convex = GridFunction::sample(33, 33, -1, -1, 1.0 / 16, [](double x, double y) { return 0.5 * (x * x + y * y); });
  CHECK(supersolution_check(convex, Ellipticity(1, 3)) == 0.0);
  const GridFunction saddle = GridFunction::sample(33, 33, -1, -1, 1.0 / 16, [](double x, double y) { return 0.5 * (x * x - y * y); });
  CHECK(supersolution_check(saddle, Ellipticity(1, 3)) == 1.0);
}

TEST_CASE("radial corpus members are supersolutions away from the kink") {
  for (const char* name : {"cone", "radial_power(1.5)", "radial_power_sub(0.5)", "perturbed_concave(4)"}) {
    const GridFunction u = corpus(name, 129);
    const auto skip = kink_exclusion(u, corpus_kinks(name));
    for (double Lam : {1.0, 1.5, 3.0, 10.0}) {
      CAPTURE(name);
      CHECK(supersolution_check(u, Ellipticity(1, Lam), skip) == 1.0);
    }
  }
  const GridFunction cone = corpus("cone", 65);
  const auto skip = kink_exclusion(cone, corpus_kinks("cone"));
  std::size_t excluded = 0;
  for (bool b : skip) excluded += b;
  CHECK(excluded == 9);
}

TEST_CASE("lemma check: empty family") {
  const GridFunction u = corpus("quadratic(1)", 33);
  CHECK(noncontact_family(u, 1.0).empty());
  const LemmaCheckReport r = lemma_check(u, Ellipticity(1, 3), 1.0, 1.0);
  CHECK(r.measure_F == 0.0);
  CHECK(r.family_size == 0);
  CHECK(r.satisfied);
  CHECK(r.interior_ok);
}

TEST_CASE("lemma check on the cone") {
  const GridFunction u = corpus("cone", 65);
  const Ellipticity ell(1, 3);
  const LemmaCheckReport r = lemma_check(u, ell, 2.0, 1.0);
  CHECK(r.c == doctest::Approx(0.75));
  CHECK(r.family_size > 0);
  CHECK(r.bound == doctest::Approx(0.1875 * r.measure_F));
  CHECK(r.measure_F == doctest::Approx(r.family_size * u.cell_area()));
  CHECK(r.slack == doctest::Approx(r.touching_count * u.cell_area()));
  CHECK(r.satisfied);
  CHECK(r.interior_ok);
  CHECK(r.measure_new_contact >= r.bound);
}

TEST_CASE("bound factor tends to c for large delta") {
  const GridFunction u = corpus("cone", 33);
  const Ellipticity ell(1, 10);
  const LemmaCheckReport r = lemma_check(u, ell, 2.0, 1e6);
  CHECK(r.bound / r.measure_F == doctest::Approx(c_of(ell)).epsilon(1e-5));
}

TEST_CASE("touching points agree with a full scan") {
  for (const char* name : {"cone", "radial_power_sub(0.5)", "double_well", "perturbed_concave(3)"}) {
    const GridFunction u = corpus(name, 33);
    for (double a : {0.5, 2.0}) {
      const double delta = 1.0;
      const double b = (1 + delta) * a;
      const auto family = noncontact_family(u, a);
      const auto touch = touching_points(u, a, delta, family);
      REQUIRE(touch.size() == family.size());
      const GridFunction env = a_envelope(u, a);
      for (std::size_t f = 0; f < family.size(); ++f) {
        const GridIndex g = family[f];
        const double gx = (env(g.i + 1, g.j) - env(g.i - 1, g.j)) * (0.5 / u.h());
        const double gy = (env(g.i, g.j + 1) - env(g.i, g.j - 1)) * (0.5 / u.h());
        const std::size_t expect = oracle::touching_brute(u, b, gx + b * u.x(g.i), gy + b * u.y(g.j));
        CAPTURE(name);
        CHECK(u.index(touch[f]) == expect);
      }
    }
  }
}

TEST_CASE("interior family keeps touching points off the boundary band") {
  const GridFunction u = corpus("radial_power_sub(0.5)", 33);
  const auto all = noncontact_family(u, 0.5);
  const auto inner = interior_family(u, 0.5, 1.0);
  CHECK(inner.size() <= all.size());
  for (const GridIndex& t : touching_points(u, 0.5, 1.0, inner)) CHECK(u.boundary_distance(t.i, t.j) >= 2);
  const LemmaCheckReport r = lemma_check(u, Ellipticity(1, 3), 0.5, 1.0, inner);
  CHECK(r.interior_ok);
}

TEST_CASE("lemma check validation") {
  const GridFunction u = corpus("cone", 17);
  const Ellipticity ell(1, 3);
  CHECK_THROWS_AS(lemma_check(u, ell, 0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(lemma_check(u, ell, 1.0, -1.0), InvalidArgument);
  const std::vector<GridIndex> in_contact_node{GridIndex{0, 0}};
  CHECK_THROWS_AS(lemma_check(u, ell, 1.0, 1.0, in_contact_node), InvalidArgument);
}
