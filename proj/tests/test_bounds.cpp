#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dirinv/bounds.hpp"
#include "dirinv/factorizations.hpp"
#include "dirinv/families.hpp"
#include "dirinv/inverse.hpp"
#include "dirinv/multiplicativity.hpp"
#include "dirinv/random_functions.hpp"
#include "dirinv/sweep.hpp"
#include "oracles.hpp"

using namespace dirinv;

TEST_CASE("closed-form inverses of the families") {
  for (const char* name : {"twoonly", "hille", "negpow:g=-1", "negpow:g=2", "pow2:C=3,g=0", "pow2:C=1/2,g=2",
                           "pow2:C=3,g=-1", "exp2:A=2,c=1/3", "exp2:A=1,c=2"}) {
    CAPTURE(name);
    const auto fam = parse_family(name);
    REQUIRE(fam.known_inverse);
    const auto inv = inverse_recursive(fam.function, 3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      CAPTURE(n);
      REQUIRE(inv[n] == fam.known_inverse(n));
    }
  }
  CHECK(parse_family("hille").known_inverse(24) == 20);
  CHECK(parse_family("negpow:g=-1").known_inverse(12) == Rational(2, 3));
  CHECK_THROWS(parse_family("negpow:g=1/2"));
  CHECK_THROWS(parse_family("pow2:C=0"));
  CHECK_THROWS(parse_family("cubes"));
  CHECK(list_families().size() == 6);
}

TEST_CASE("power-of-two exponential family") {
  const auto big = parse_family("exppow2:A=1,c=2");
  CHECK_FALSE(big.known_inverse);
  CHECK(inverse_prime_power(big.function, 2, 3) == 448);
  CHECK(inverse_recursive(big.function, 8)[8] == 448);
  const auto small = parse_family("exppow2:A=1,c=1/2");
  CHECK(inverse_prime_power(small.function, 2, 2) == Rational(1, 8));
}

TEST_CASE("bound values at sample points") {
  const auto gp = BoundSpec::general_poly(1, 0);
  REQUIRE(gp.exponent());
  const Real b = bound_value(gp, 100).upper;
  CHECK(std::abs(static_cast<double>(b) - 2866.1207148422555) < 1e-4);
  CHECK(b > pow(Real(100), Real(1.7286472389981836)));

  const auto mp = BoundSpec::mult_poly(3, 0);
  for (unsigned k = 1; k <= 20; ++k) {
    const auto v = bound_value(mp, 1ULL << k);
    REQUIRE(v.exact);
    REQUIRE(*v.exact == 3 * pow(Rational(4), static_cast<long>(k) - 1));
  }
  const auto pp = BoundSpec::prime_power_partition(1, Rational(1, 2));
  CHECK(*bound_value(pp, 4).exact == Rational(1, 8));
  CHECK(prime_power_partition_bound(1, Rational(1, 2), 2, 2) == Rational(1, 8));
  CHECK(*bound_value(BoundSpec::truncated_low(5, 1, 0), 4).exact == 0);
  CHECK(*bound_value(BoundSpec::mult_poly_zero_higher_powers(2, 1), 12).exact == 8 * 12);
}

TEST_CASE("upward rounding is tight and one-sided") {
  const auto gp = BoundSpec::general_poly(2, -1);
  const double expo = -1 + gp.exponent()->hi;
  for (std::uint64_t n : {2ULL, 17ULL, 1000ULL, 999983ULL}) {
    const Real upper = bound_value(gp, n).upper;
    const Real direct = pow(Real(n), Real(expo));
    CHECK(upper > direct);
    CHECK(upper / direct - 1 < Real(1e-50));
  }
}

TEST_CASE("regimes and parsing") {
  CHECK_THROWS_AS(BoundSpec::exp_small_c(1, 2), RegimeError);
  CHECK_THROWS_AS(BoundSpec::exp_large_c(1, Rational(1, 2)), RegimeError);
  CHECK_THROWS_AS(BoundSpec::exp_small_c_unit_a(Rational(1, 2), 2), RegimeError);
  CHECK_THROWS_AS(BoundSpec::general_poly(0, 0), RegimeError);
  CHECK_THROWS_AS(BoundSpec::truncated_high(1, 1, 0), RegimeError);
  const auto s = BoundSpec::parse("trunchigh:N=3,C=1,g=0");
  CHECK(s.kind() == BoundKind::TruncatedHigh);
  CHECK(std::abs(s.exponent()->value - 0.787884911025870) < 1e-8);
  CHECK(BoundSpec::parse("oddsupport:C=1,g=0").exponent()->value == doctest::Approx(1.3777851698).epsilon(1e-9));
  CHECK(BoundSpec::parse("explargec:A=1,c=2").label() == "explargec:A=1,c=2");
  CHECK_THROWS(BoundSpec::parse("generalpoly:Q=1"));
  CHECK_THROWS(BoundSpec::parse("nosuch"));
  // N = 2, C = 1 puts the root on s = 0.
  CHECK(BoundSpec::truncated_high(2, 1, 0).exponent()->boundary);
}

TEST_CASE("optimal multiplicative family reaches the bound") {
  for (const auto& [C, g] : std::vector<std::pair<Rational, Rational>>{{1, 0}, {3, -1}, {Rational(1, 2), 2}}) {
    const auto fam = extremal_family(FamilyKind::PowerOfTwoPolynomial, {.C = C, .gamma = g});
    const auto spec = BoundSpec::mult_poly(C, g);
    const auto inv = inverse_prime_power_sequence(fam.function, 2, 30);
    for (unsigned k = 1; k <= 30; ++k) {
      const auto b = bound_value(spec, 1ULL << k);
      REQUIRE(b.exact);
      REQUIRE(abs(inv[k]) == *b.exact);
    }
  }
}

TEST_CASE("random functions honour their hypotheses") {
  const std::vector<const char*> specs = {
      "submultpoly:C=2,g=0", "multpoly:C=1/2,g=1", "multpolyzero:C=3,g=-1", "multexp:A=2,c=1/2",
      "ppartition:A=1,c=1/3", "generalpoly:C=1/2,g=1/2", "generalpolylog:C=1,g=0", "expsmallc:A=2,c=1/2",
      "expsmallcunita:A=1,c=1/2", "explargec:A=1,c=2", "trunclow:N=4,C=1,g=0", "trunchigh:N=30,C=2,g=1",
      "oddsupport:C=1,g=0"};
  for (const char* text : specs) {
    CAPTURE(text);
    const auto spec = BoundSpec::parse(text);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto f = random_function_for(spec, 600, seed);
      REQUIRE_NOTHROW(check_hypothesis(spec, f, 600));
      const auto again = random_function_for(spec, 600, seed);
      for (std::uint64_t n = 1; n <= 600; ++n) REQUIRE(f(n) == again(n));
    }
  }
}

TEST_CASE("random values sit on the 2^-16 grid") {
  const auto f = random_function(Envelope::polynomial(1, 0), 2000, 5);
  int nonzero = 0, negative = 0;
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    const Rational v = f(n);
    REQUIRE(abs(v) <= 1);
    REQUIRE(mpz_class(65536) % v.get_den() == 0);
    nonzero += sgn(v) != 0;
    negative += sgn(v) < 0;
  }
  CHECK(nonzero > 1990);
  CHECK(negative > 900);
  CHECK(negative < 1100);
}

TEST_CASE("irrational envelopes are approached from below") {
  const auto env = Envelope::polynomial(Rational(1, 2), Rational(1, 2));
  CHECK_FALSE(env.is_exact());
  for (std::uint64_t n : {2ULL, 3ULL, 10ULL, 9973ULL}) {
    const Rational lo = env.lower(n);
    CHECK(to_real(lo) < sqrt(Real(n)) / 2);
    CHECK(to_real(lo) > sqrt(Real(n)) / 2 * (1 - Real(1e-8)));
    CHECK(env.admits(lo, n));
    CHECK_FALSE(env.admits(lo * 2, n));
    CHECK_FALSE(env.admits(lo * Rational(1000000001, 1000000000), n));
  }
  CHECK(Envelope::polynomial(1, 0).lower(7) == 1);
  CHECK(Envelope::exponential(2, Rational(1, 3)).lower(3) == Rational(2, 27));
}

TEST_CASE("super and submultiplicative inverse bounds") {
  const auto h = ordered_factorization_table(5000, FactorSet::all_from_2());
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto sup = random_function(Envelope::polynomial(1, 1), 5000, seed, {.structure = RandomStructure::Supermultiplicative});
    REQUIRE(check_multiplicativity(sup, 5000).supermultiplicative_abs.holds);
    const auto sinv = inverse_recursive(sup, 5000);
    for (std::uint64_t n = 2; n <= 5000; ++n) REQUIRE(abs(sinv[n]) <= supermultiplicative_bound(h[n], sup(n)));

    const auto sub = random_function(Envelope::polynomial(2, 0), 5000, seed, {.structure = RandomStructure::Submultiplicative});
    REQUIRE(check_multiplicativity(sub, 5000).submultiplicative_abs.holds);
    const auto binv = inverse_recursive(sub, 5000);
    for (std::uint64_t n = 2; n <= 5000; ++n) {
      const auto fac = factorize(n);
      std::vector<Rational> at;
      for (const auto& pp : fac) at.push_back(sub(pp.prime));
      REQUIRE(abs(binv[n]) <= submultiplicative_bound(h[n], fac, at));
    }
  }
}

TEST_CASE("zero on higher prime powers gives a totally multiplicative inverse") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto f = random_function(Envelope::polynomial(2, 0), 10000, seed, {.structure = RandomStructure::ZeroHigherPowers});
    const auto inv = inverse_recursive(f, 10000);
    for (std::uint64_t m = 2; m <= 100; ++m)
      for (std::uint64_t n = m; m * n <= 10000; ++n) REQUIRE(inv[m * n] == inv[m] * inv[n]);
  }
}

TEST_CASE("sweeps") {
  const auto hille = parse_family("hille");
  const auto r = verify_sweep(BoundSpec::general_poly(1, 0), hille.function, 2, 20000);
  CHECK(r.summary.checked == 19999);
  CHECK(r.summary.failures == 0);
  CHECK(r.summary.max_ratio < 1);
  CHECK(r.reports.front().n == 2);
  CHECK(r.reports.back().n == 20000);
  CHECK(r.reports[22].inverse_abs == 20);  // n = 24

  const auto odd = random_function_for(BoundSpec::odd_support(1, 0), 10000, 11);
  const auto ro = verify_sweep(BoundSpec::odd_support(1, 0), odd, 2, 10000);
  CHECK(ro.summary.failures == 0);

  const auto big = verify_sweep(BoundSpec::exp_large_c(1, 2), random_function_for(BoundSpec::exp_large_c(1, 2), 300, 3), 2, 300);
  CHECK(big.summary.failures == 0);
  REQUIRE(big.summary.fitted_constant);
  CHECK(*big.summary.fitted_constant > 0);
}

TEST_CASE("a violated hypothesis aborts with a witness") {
  const auto hille = parse_family("hille");
  try {
    verify_sweep(BoundSpec::odd_support(1, 0), hille.function, 2, 100);
    FAIL("expected a violation");
  } catch (const HypothesisViolation& e) {
    CHECK(e.witness() == 2);
  }
  try {
    verify_sweep(BoundSpec::mult_poly(1, 0), hille.function, 2, 100);
    FAIL("expected a violation");
  } catch (const HypothesisViolation& e) {
    CHECK(e.witness() == 6);
  }
  const auto twice = ArithmeticFunction("twice", [](std::uint64_t n) { return n == 1 ? Rational(1) : Rational(n == 50 ? 2 : 1); });
  try {
    verify_sweep(BoundSpec::general_poly(1, 0), twice, 2, 100);
    FAIL("expected a violation");
  } catch (const HypothesisViolation& e) {
    CHECK(e.witness() == 50);
  }
}

TEST_CASE("a false bound is reported as a failure") {
  // The Hille inverse exceeds n^(g + varsigma) for any g < -varsigma.
  const auto hille = parse_family("hille");
  SweepOptions opts;
  opts.check_hypothesis = false;
  const auto r = verify_sweep(BoundSpec::general_poly(1, -2), hille.function, 2, 200, opts);
  CHECK(r.summary.failures > 0);
  CHECK(r.summary.first_failure == 2u);
}

TEST_CASE("threads and sampling do not change results") {
  const auto spec = BoundSpec::general_poly(Rational(1, 2), Rational(1, 2));
  const auto f = random_function_for(spec, 3000, 99);
  SweepOptions one, many;
  one.threads = 1;
  many.threads = 5;
  const auto a = verify_sweep(spec, f, 2, 3000, one);
  const auto b = verify_sweep(spec, f, 2, 3000, many);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    REQUIRE(a.reports[i].n == b.reports[i].n);
    REQUIRE(a.reports[i].ratio == b.reports[i].ratio);
  }
  SweepOptions sample;
  sample.mode = SweepMode::RandomSample;
  sample.sample_size = 100;
  sample.seed = 4;
  const auto s = verify_sweep(spec, f, 2, 3000, sample);
  REQUIRE(s.reports.size() == 100);
  for (std::size_t i = 1; i < s.reports.size(); ++i) REQUIRE(s.reports[i - 1].n < s.reports[i].n);
  const auto s2 = verify_sweep(spec, f, 2, 3000, sample);
  for (std::size_t i = 0; i < s.reports.size(); ++i) REQUIRE(s.reports[i].n == s2.reports[i].n);
}
