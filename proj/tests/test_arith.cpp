#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mutex>
#include <thread>

#include "dirinv/arithmetic_function.hpp"
#include "dirinv/inverse.hpp"
#include "dirinv/multiplicativity.hpp"
#include "dirinv/number_theory.hpp"
#include "oracles.hpp"

using namespace dirinv;

namespace {

ArithmeticFunction table_function(const std::vector<mpq_class>& v) {
  return ArithmeticFunction::from_table("t", v);
}

}  // namespace

TEST_CASE("primality against trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::naive_prime(n));
  CHECK(is_prime(9999991));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("factorization round trip") {
  for (std::uint64_t n = 1; n < 5000; ++n) {
    const auto f = factorize(n);
    REQUIRE(reconstruct(f) == n);
    for (const auto& pp : f) REQUIRE(oracle::naive_prime(pp.prime));
    REQUIRE(divisors(n) == oracle::naive_divisors(n));
    REQUIRE(tau(n) == oracle::naive_divisors(n).size());
    REQUIRE(mobius(n) == oracle::naive_mobius(n));
  }
  const std::uint64_t big = 1000000007ULL * 998244353ULL;
  const auto f = factorize(big);
  REQUIRE(f.size() == 2);
  CHECK(f[0].prime == 998244353ULL);
  CHECK(f[1].prime == 1000000007ULL);
  CHECK(big_omega(1024) == 10);
  CHECK(small_omega(360) == 3);
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(kMaxFactorizable + 1), std::invalid_argument);
}

TEST_CASE("sieve factorization agrees") {
  const SmallestPrimeFactorSieve sieve(100000);
  for (std::uint32_t n = 1; n <= 100000; n += 7) REQUIRE(sieve.factorize(n) == factorize(n));
}

TEST_CASE("rational text") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-8)) == "-8");
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("normalization is enforced") {
  CHECK_THROWS_AS(ArithmeticFunction("bad", [](std::uint64_t) { return Rational(2); })(1), NormalizationError);
  CHECK_THROWS_AS(ArithmeticFunction::from_table("bad", {0, 3, 1}), NormalizationError);
  const auto g = inverse_recursive_unnormalized([](std::uint64_t n) { return n == 1 ? Rational(2) : Rational(-2); }, 12);
  CHECK(g[12] == 4);
  CHECK_THROWS_AS(inverse_recursive_unnormalized([](std::uint64_t) { return Rational(0); }, 4), std::invalid_argument);
}

TEST_CASE("recursive inverse matches the naive oracle") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto v = oracle::random_table(600, seed);
    const auto expect = oracle::naive_inverse(v);
    const auto got = inverse_recursive(table_function(v), 600);
    for (std::uint64_t n = 1; n <= 600; ++n) REQUIRE(got[n] == expect[n]);
  }
}

TEST_CASE("convolution with the inverse is epsilon") {
  const auto v = oracle::random_table(2000, 42);
  const auto f = table_function(v);
  const auto inv = inverse_recursive(f, 2000);
  const auto g = ArithmeticFunction::from_table("inv", inv.values());
  for (std::uint64_t n = 1; n <= 2000; ++n) REQUIRE(convolve(f, g, n) == epsilon(n));
}

TEST_CASE("sum formula route") {
  const auto v = oracle::random_table(400, 9);
  const auto f = table_function(v);
  const auto inv = inverse_recursive(f, 400);
  for (std::uint64_t n = 2; n <= 400; ++n) REQUIRE(inverse_sum_formula(f, n) == inv[n]);
  SumFormulaOptions tight;
  tight.tuple_ceiling = 10;
  CHECK_THROWS(inverse_sum_formula(f, 360, tight));
}

TEST_CASE("prime power and multiplicative routes") {
  // f(p^k) = (-1)^k / (k + 1), extended multiplicatively.
  const ArithmeticFunction f("mult", [](std::uint64_t n) {
    Rational out = 1;
    for (const auto& [p, e] : factorize(n)) out *= Rational((e % 2) ? -1 : 1, e + 1);
    return out;
  });
  const auto inv = inverse_recursive(f, 3000);
  for (std::uint64_t n = 1; n <= 3000; ++n) REQUIRE(inverse_multiplicative(f, n) == inv[n]);
  const auto seq = inverse_prime_power_sequence(f, 2, 10);
  for (unsigned k = 0; k <= 10; ++k) CHECK(seq[k] == inv[1u << k]);
  CHECK_THROWS_AS(inverse_prime_power(f, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(inverse_prime_power(f, 2, 64), std::invalid_argument);
}

TEST_CASE("totally multiplicative inverse is mu f") {
  const ArithmeticFunction f("tm", [](std::uint64_t n) {
    Rational out = 1;
    for (const auto& [p, e] : factorize(n)) out *= pow(Rational(1, static_cast<long>(p) + 1), static_cast<long>(e));
    return out;
  });
  const auto inv = inverse_recursive(f, 10000);
  for (std::uint64_t n = 1; n <= 10000; ++n) REQUIRE(inverse_totally_multiplicative(f, n) == inv[n]);
}

TEST_CASE("inverting twice gives f back") {
  const auto v = oracle::random_table(3000, 77);
  const auto inv = inverse_recursive(table_function(v), 3000);
  const auto back = inverse_recursive(ArithmeticFunction::from_table("inv", inv.values()), 3000);
  for (std::uint64_t n = 1; n <= 3000; ++n) REQUIRE(back[n] == v[n]);
}

TEST_CASE("rescaling") {
  const auto v = oracle::random_table(1000, 5);
  const auto inv = inverse_recursive(table_function(v), 1000);
  for (const Rational a : {Rational(-2), Rational(1, 3)}) {
    const auto scaled = inverse_recursive_unnormalized([&](std::uint64_t n) { return Rational(a * v[n]); }, 1000);
    for (std::uint64_t n = 1; n <= 1000; ++n) REQUIRE(scaled[n] == inv[n] / a);
  }
}

TEST_CASE("multiplicativity classes") {
  const ArithmeticFunction identity("id", [](std::uint64_t n) { return rational_from_u64(n); });
  auto r = check_multiplicativity(identity, 500);
  CHECK(r.totally_multiplicative.holds);
  CHECK(r.multiplicative.holds);
  CHECK(r.supermultiplicative_abs.holds);
  CHECK(r.submultiplicative_abs.holds);

  const ArithmeticFunction tau_f("tau", [](std::uint64_t n) { return rational_from_u64(tau(n)); });
  r = check_multiplicativity(tau_f, 500);
  CHECK(r.multiplicative.holds);
  CHECK_FALSE(r.totally_multiplicative.holds);
  CHECK(r.totally_multiplicative.counterexample == std::pair<std::uint64_t, std::uint64_t>{2, 2});
  CHECK(r.submultiplicative_abs.holds);
  CHECK_FALSE(r.supermultiplicative_abs.holds);

  const ArithmeticFunction hille("h", [](std::uint64_t n) { return n == 1 ? Rational(1) : Rational(-1); });
  r = check_multiplicativity(hille, 100);
  CHECK_FALSE(r.multiplicative.holds);
  CHECK(r.supermultiplicative_abs.holds);
  CHECK(r.submultiplicative_abs.holds);
}

TEST_CASE("memo is shared between copies and safe under threads") {
  int calls = 0;
  std::mutex m;
  const ArithmeticFunction f("count", [&](std::uint64_t n) {
    std::lock_guard lock(m);
    ++calls;
    return n == 1 ? Rational(1) : Rational(1, static_cast<long>(n));
  });
  const ArithmeticFunction g = f;
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&] {
      for (std::uint64_t n = 1; n <= 200; ++n) REQUIRE(g(n) == (n == 1 ? Rational(1) : Rational(1, static_cast<long>(n))));
    });
  for (auto& t : pool) t.join();
  CHECK(calls >= 200);
  const int before = calls;
  for (std::uint64_t n = 1; n <= 200; ++n) (void)f(n);
  CHECK(calls == before);
}
