#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numbers>

#include "dirinv/roots.hpp"
#include "dirinv/zeta.hpp"
#include "oracles.hpp"

using namespace dirinv;

TEST_CASE("zeta at classical points") {
  const double pi = std::numbers::pi;
  CHECK(std::abs(zeta_real(2, 1e-12) - pi * pi / 6) < 1e-9);
  CHECK(std::abs(zeta_real(4, 1e-12) - std::pow(pi, 4) / 90) < 1e-9);
  CHECK(std::abs(zeta_real(1.72865, 1e-12) - 2.0) < 1e-4);
}

TEST_CASE("zeta against an independent implementation") {
  for (double s = 1.01; s < 12; s += 0.137) {
    const double want = boost::math::zeta(s);
    REQUIRE(std::abs(zeta_real(s, 1e-12) - want) < 1e-10 * std::max(1.0, want));
  }
  CHECK(std::abs(zeta_real(1.0 + 2e-6, 1e-9) - boost::math::zeta(1.0 + 2e-6)) < 1e-3);
  CHECK_THROWS_AS(zeta_real(1.0), ZetaDomainError);
  CHECK_THROWS_AS(zeta_real(0.5), ZetaDomainError);
}

TEST_CASE("remainder estimate is honest") {
  for (double s : {1.1, 1.5, 2.0, 3.3}) {
    const auto e = zeta_tail_estimate(s, 1, 64, 6);
    const double truth = boost::math::zeta(s);
    CHECK(std::abs(e.value - truth) <= e.error_bound + 1e-15 * truth);
  }
}

TEST_CASE("tail stability under a larger cutoff") {
  for (double s : {1.1, 1.3, 2.0, 5.0}) {
    const auto a = zeta_tail_estimate(s, 1, 200, 11);
    const auto b = zeta_tail_estimate(s, 1, 800, 11);
    CHECK(std::abs(a.value - b.value) <= a.error_bound + b.error_bound);
  }
}

TEST_CASE("factor set sums") {
  const double pi = std::numbers::pi;
  CHECK(std::abs(zeta_factor_set(FactorSet::all_from_2(), 2) - (pi * pi / 6 - 1)) < 1e-10);
  CHECK(std::abs(zeta_factor_set(FactorSet::odd_from_3(), 2) - oracle::direct_zeta(2, 3, 2, 50'000'000)) < 1e-8);
  CHECK(std::abs(zeta_factor_set(FactorSet::odd_from_3(), 2) - 0.233700550136170) < 1e-10);
  CHECK(zeta_factor_set(FactorSet::parse("list:2,3"), 1) == doctest::Approx(5.0 / 6));
  CHECK(zeta_factor_set(FactorSet::parse("list:2,3"), -1) == doctest::Approx(5.0));
  CHECK_THROWS_AS(zeta_factor_set(FactorSet::all_from_2(), 1), ZetaDomainError);
  CHECK(convergence_abscissa(FactorSet::odd_from_3()) == 1);
  CHECK(std::isinf(convergence_abscissa(FactorSet::parse("list:2,3"))));
}

TEST_CASE("Kalmar and odd exponents") {
  const auto rho = solve(ZetaEquation::full_zeta_equals(2));
  CHECK(std::abs(rho.value - 1.72865) < 1e-5);
  CHECK(std::abs(rho.value - 1.7286472389981836) < 1e-9);
  CHECK(rho.hi - rho.lo <= 1e-9);
  CHECK_FALSE(rho.boundary);
  const auto eta = solve(ZetaEquation::odd_zeta_equals(2));
  CHECK(std::abs(eta.value - 1.37779) < 1e-5);
  CHECK(std::abs(eta.value - 1.3777851698375412) < 1e-9);
  const auto same = growth_exponent(FactorSet::all_from_2());
  CHECK(std::abs(same.value - rho.value) < 1e-9);
  CHECK(std::abs(growth_exponent(FactorSet::odd_from_3()).value - eta.value) < 1e-9);
}

TEST_CASE("enclosures certify a sign change") {
  for (const char* text : {"zeta2", "odd2", "varsigma:2", "varsigma:1/2", "oddsigma:3", "upsilon:2,2",
                           "trunclow:3,1", "finite:5,2"}) {
    const auto eq = parse_equation(text);
    const auto g = solve(eq);
    REQUIRE(eq.residual(g.lo, 1e-12) > 0);
    REQUIRE(eq.residual(g.hi, 1e-12) < 0);
  }
}

TEST_CASE("growth exponents for other constants") {
  CHECK(std::abs(solve(parse_equation("varsigma:2")).value - 2.18528545) < 1e-7);
  CHECK(std::abs(solve(parse_equation("varsigma:1/2")).value - 1.41784594) < 1e-7);
  CHECK(std::abs(solve(parse_equation("upsilon:1,2")).value - 2.78843271) < 1e-7);
  CHECK(std::abs(solve(parse_equation("upsilon:2,2")).value - 3.51545182) < 1e-7);
  // Truncating the first N terms: sum_{m > N} m^-s = 1/C.
  const auto t = solve(parse_equation("trunclow:3,1"));
  CHECK(std::abs(boost::math::zeta(t.value) - 1 - std::pow(2.0, -t.value) - std::pow(3.0, -t.value) - 1) < 1e-8);
}

TEST_CASE("finite sets") {
  const double want =
      oracle::bisect([](double s) { return std::pow(2.0, -s) + std::pow(3.0, -s) - 1; }, -10, 10);
  const auto g = solve(ZetaEquation::finite_set(3, 1));
  CHECK(std::abs(g.value - want) < 1e-9);
  CHECK(std::abs(g.value - 0.78788) < 1e-4);
  const auto edge = solve(ZetaEquation::finite_set(2, 1));
  CHECK(edge.boundary);
  CHECK(edge.value == 0);
  CHECK(edge.lo <= 0);
  CHECK(edge.hi >= 0);
  // A small C pushes the finite root below zero.
  const auto neg = solve(ZetaEquation::finite_set(4, Rational(1, 10)));
  const double oracle_neg = oracle::bisect(
      [](double s) { return std::pow(2.0, -s) + std::pow(3.0, -s) + std::pow(4.0, -s) - 10; }, -20, 20);
  CHECK(std::abs(neg.value - oracle_neg) < 1e-8);
  const auto list = growth_exponent(FactorSet::parse("list:2,3"));
  CHECK(std::abs(list.value - want) < 1e-9);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(parse_equation("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(parse_equation("varsigma:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_equation("upsilon:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_equation("finite:1,1"), std::invalid_argument);
  CHECK_THROWS_AS(solve(ZetaEquation::full_zeta_equals(Rational(1, 2))), RootNotBracketed);
  SolveOptions tight;
  tight.tolerance = 1e-18;
  CHECK_THROWS_AS(solve(ZetaEquation::full_zeta_equals(2), tight), ToleranceUnachievable);
}
