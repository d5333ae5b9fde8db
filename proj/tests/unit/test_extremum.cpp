#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "heps/ellipticity.hpp"
#include "heps/errors.hpp"
#include "heps/extremum.hpp"

using namespace heps;

TEST_CASE("critical function values and domain") {
  CHECK(critical_function(0.5, 1.0) == doctest::Approx(std::log(0.75) / std::log(0.5)));
  CHECK(critical_function(0.5, 1.0) == doctest::Approx(0.4150375).epsilon(1e-7));
  CHECK(critical_function(0.855, 0.75) == doctest::Approx(0.4115272).epsilon(1e-6));
  CHECK(critical_function(0.5, 0.5, 3) == doctest::Approx(std::log(1 - 0.5 / 8) / std::log(0.5)));
  CHECK_THROWS_AS(critical_function(0.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(critical_function(1.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(critical_function(0.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(critical_function(0.5, 1.5), InvalidArgument);
  CHECK_THROWS_AS(critical_function(0.5, 0.5, 1), InvalidArgument);
}

TEST_CASE("m0 against a grid search") {
  const M0Result r = m0(2);
  CHECK(r.value == doctest::Approx(oracle::m0_grid(2)).epsilon(1e-12));
  CHECK(r.value >= 0.407255);
  CHECK(r.value <= 0.407270);
  CHECK(r.maximizer == doctest::Approx(0.71533186).epsilon(1e-7));
  CHECK(4 * r.value > 1.629);
  CHECK(m0(3).value == doctest::Approx(oracle::m0_grid(3)).epsilon(1e-12));
  CHECK(m0(3).value == doctest::Approx(0.32371685).epsilon(1e-7));
  CHECK_THROWS_AS(m0(1), InvalidArgument);
}

TEST_CASE("the interpolation anchor is the m0 maximizer") {
  // Stationarity of x^2/(-ln(1-x)) gives 2(1-x)(-ln(1-x)) = x, so m0 = x^2/(-ln(1-x))
  // = 2 x (1-x), whose root in (1/2, 1) is (1 + sqrt(1 - 2 m0))/2.
  const M0Result r = m0(2);
  CHECK(interp_anchor() == doctest::Approx(r.maximizer).epsilon(1e-9));
  CHECK(interp_anchor() == doctest::Approx(0.715).epsilon(1e-3));
}

TEST_CASE("solve_system at c = 0.75") {
  const CriticalPoint p = solve_system(0.75);
  CHECK(p.x_c == doctest::Approx(0.85511686).epsilon(1e-7));
  CHECK(p.d_c == doctest::Approx(0.41152721).epsilon(1e-7));
  CHECK(std::abs(p.residual_value) <= 1e-10);
  CHECK(std::abs(p.residual_slope) <= 1e-10);
  CHECK_FALSE(p.boundary_flag);
  CHECK(p.d_c == doctest::Approx(oracle::critical_grid_max(0.75, 200000)).epsilon(1e-9));
}

TEST_CASE("solve_system boundary and validation") {
  const CriticalPoint p = solve_system(1.0);
  CHECK(p.boundary_flag);
  CHECK(p.x_c == 1.0);
  CHECK(p.d_c == 1.0);
  CHECK_THROWS_AS(solve_system(0.0), InvalidArgument);
  CHECK_THROWS_AS(solve_system(1.2), InvalidArgument);
  CHECK_THROWS_AS(solve_system(0.5, 1), InvalidArgument);
}

TEST_CASE("solve_system residuals across c, including near the ends") {
  for (double c : {1e-8, 1e-4, 0.01, 0.2, 0.5, 0.9, 0.99, 0.9999, 0.999999}) {
    CAPTURE(c);
    const CriticalPoint p = solve_system(c);
    CHECK(p.x_c > 0.0);
    CHECK(p.x_c < 1.0);
    CHECK(std::abs(p.residual_value) <= 1e-10);
    CHECK(std::abs(p.residual_slope) <= 1e-10);
    // The x form loses digits in 1 - x near c = 1; the solver works in -ln(1 - x).
    CHECK(p.d_c == doctest::Approx(critical_function(p.x_c, c)).epsilon(1e-9));
    // Slope sign flips across the maximizer.
    CHECK(critical_slope_sign(p.x_c * (1 - 1e-4), c) > 0);
    CHECK(critical_slope_sign(1 - (1 - p.x_c) * (1 - 1e-3), c) < 0);
  }
}

TEST_CASE("Newton on the raw system agrees with the bracketed search") {
  for (double c : {0.05, 0.3, 0.75, 0.95}) {
    const CriticalPoint p = solve_system(c);
    const CriticalPoint q = newton_system(c, p.x_c * 0.99, p.d_c * 1.01);
    CHECK(q.x_c == doctest::Approx(p.x_c).epsilon(1e-9));
    CHECK(q.d_c == doctest::Approx(p.d_c).epsilon(1e-9));
  }
}

TEST_CASE("closed-form maximizer") {
  for (double c : {0.05, 0.3, 0.75, 0.95}) {
    const CriticalPoint p = solve_system(c);
    CHECK(x_c_closed_form(p.d_c, c) == doctest::Approx(p.x_c).epsilon(1e-8));
  }
  CHECK_THROWS_AS(x_c_closed_form(0.9, 0.1), InvalidArgument);
  CHECK_THROWS_AS(x_c_closed_form(0.0, 0.5), InvalidArgument);
}

TEST_CASE("psi tends to m0 as c -> 0") {
  CHECK(psi(1e-7) == doctest::Approx(m0(2).value).epsilon(1e-6));
  CHECK(psi(0.75) == doctest::Approx(0.54870295).epsilon(1e-7));
  CHECK(psi(1.0) == 1.0);
}

TEST_CASE("lower bounds at reference ellipticities") {
  const Ellipticity small = Ellipticity::from_ratio(1e-3);
  CHECK(c_of(small) == doctest::Approx(0.003992).epsilon(1e-6));
  CHECK(lower_bound_opt(small) == doctest::Approx(0.0016274682).epsilon(1e-9));
  CHECK(lower_bound_opt(small) / upper_bound_ass(small) == doctest::Approx(0.8145478).epsilon(1e-6));
  CHECK((1 / 1e-3 + 1) * lower_bound_opt(small) == doctest::Approx(1.6290957).epsilon(1e-6));

  const Ellipticity third(1, 3);
  CHECK(lower_bound_opt(third) == doctest::Approx(0.41152721).epsilon(1e-7));
  CHECK(interp_point(third) == doctest::Approx(0.858052).epsilon(1e-6));
  CHECK(lower_bound_interp(third) == doctest::Approx(0.41150865).epsilon(1e-7));
  CHECK(lower_bound_interp(third) <= lower_bound_opt(third));
  CHECK_THROWS_AS(interp_point(Ellipticity(1, 1)), InvalidArgument);

  CHECK(lower_bound_opt(Ellipticity::from_ratio(0.62)) > 0.62);
  CHECK(lower_bound_opt(Ellipticity::from_ratio(0.62)) == doctest::Approx(0.64043).epsilon(1e-5));
}

TEST_CASE("intrinsic ratio") {
  const Ellipticity e(1, 100);
  const double x = solve_system(c_of(e)).x_c;
  CHECK(intrinsic_ratio(e) == doctest::Approx(1.0 / (1.0 - x)));
  CHECK(intrinsic_ratio(e) == doctest::Approx(3.573).epsilon(1e-3));
  CHECK(std::isinf(intrinsic_ratio(Ellipticity(1, 1))));
}

TEST_CASE("bound report") {
  const BoundReport r = bound_report(Ellipticity(2, 2));
  CHECK(r.tau == 1.0);
  CHECK(r.c == 1.0);
  CHECK(r.eps_lower_opt == 1.0);
  CHECK(r.eps_lower_interp == 1.0);
  CHECK(r.eps_upper == 1.0);
  CHECK(r.ratio == 1.0);

  for (int k = 1; k < 100; ++k) {
    const double tau = k / 100.0;
    const BoundReport b = bound_report(Ellipticity::from_ratio(tau));
    CAPTURE(tau);
    CHECK(b.eps_lower_interp <= b.eps_lower_opt + 1e-9);
    CHECK(b.eps_lower_opt <= b.eps_upper + 1e-9);
    CHECK(b.ratio > 0.81);
    CHECK(b.ratio <= 1.0);
  }
}
