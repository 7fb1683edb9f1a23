#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dirinv/errors.hpp"
#include "dirinv/factor_set.hpp"
#include "dirinv/factor_sums.hpp"
#include "dirinv/factorizations.hpp"
#include "dirinv/number_theory.hpp"
#include "dirinv/partitions.hpp"
#include "oracles.hpp"

using namespace dirinv;

namespace {
const FactorSet all2 = FactorSet::all_from_2();
const FactorSet odd3 = FactorSet::odd_from_3();
bool any(std::uint64_t) { return true; }
bool odd(std::uint64_t m) { return m % 2 == 1; }
}  // namespace

TEST_CASE("factor sets") {
  CHECK(all2.contains(2));
  CHECK_FALSE(all2.contains(1));
  CHECK(odd3.contains(9));
  CHECK_FALSE(odd3.contains(4));
  CHECK(odd3.min_element() == 3);
  const FactorSet list = FactorSet::parse("list:5,2,3");
  CHECK(list.is_finite());
  CHECK(list.min_element() == 2);
  CHECK(list.members() == std::vector<std::uint64_t>{2, 3, 5});
  CHECK_THROWS(FactorSet::parse("list:1,2"));
  CHECK_THROWS(FactorSet::parse("evens"));
  const FactorSet pred = FactorSet::predicate_truncated([](std::uint64_t m) { return m % 3 == 0; }, 100, "mult3");
  CHECK(pred.contains(9));
  CHECK_THROWS_AS(pred.require_defined_up_to(101), std::domain_error);
}

TEST_CASE("H(12) tuples in lexicographic order") {
  const auto got = enumerate_ordered_factorizations(12, all2);
  const std::vector<OrderedFactorization> expect = {{2, 2, 3}, {2, 3, 2}, {2, 6}, {3, 2, 2},
                                                    {3, 4},    {4, 3},    {6, 2}, {12}};
  CHECK(got == expect);
  CHECK(count_ordered_factorizations(12, all2) == 8);
}

TEST_CASE("known counts") {
  CHECK(count_ordered_factorizations(64, all2) == 32);
  CHECK(count_ordered_factorizations(24, all2) == 20);
  CHECK(count_ordered_factorizations(45, odd3) == 8);
  CHECK(count_ordered_factorizations(6, all2) == 3);
  CHECK(count_ordered_factorizations(1, all2) == 1);
  CHECK(count_ordered_factorizations(9999991, all2) == 1);
  CHECK(count_ordered_factorizations(12, odd3) == 0);
  const std::vector<std::uint64_t> hille = {1, 1, 2, 1, 3, 1, 4, 2, 3, 1, 8};
  for (std::uint64_t n = 2; n <= 12; ++n) CHECK(count_ordered_factorizations(n, all2) == hille[n - 2]);
}

TEST_CASE("enumeration, recursion and table agree") {
  const auto rec = oracle::hille_recursion(3000);
  const auto table = ordered_factorization_table(3000, all2);
  const auto odd_table = ordered_factorization_table(3000, odd3);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    REQUIRE(table[n] == rec[n]);
    REQUIRE(count_ordered_factorizations(n, all2) == rec[n]);
    REQUIRE(odd_table[n] == count_ordered_factorizations(n, odd3));
  }
  for (std::uint64_t n = 2; n <= 400; ++n) {
    const auto brute = oracle::all_tuples(n, any);
    REQUIRE(enumerate_ordered_factorizations(n, all2) == brute);
    REQUIRE(oracle::all_tuples(n, odd).size() == count_ordered_factorizations(n, odd3));
  }
  const FactorSet list = FactorSet::parse("list:2,3,5");
  for (std::uint64_t n = 2; n <= 400; ++n) {
    const auto brute = oracle::all_tuples(n, [](std::uint64_t m) { return m == 2 || m == 3 || m == 5; });
    REQUIRE(count_ordered_factorizations(n, list) == brute.size());
  }
}

TEST_CASE("layers by length") {
  const auto layers = ordered_factorization_layers(2000, 11, all2);
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    const auto brute = oracle::all_tuples(n, any);
    for (unsigned k = 1; k <= 11; ++k) {
      const auto expect = static_cast<std::uint64_t>(
          std::count_if(brute.begin(), brute.end(), [k](const auto& t) { return t.size() == k; }));
      REQUIRE(layers[k][n] == expect);
      if (k <= big_omega(n) + 1) REQUIRE(count_ordered_factorizations_k(n, k, all2) == expect);
    }
  }
  CHECK(count_ordered_factorizations_k(12, 2, all2) == 4);
  CHECK(count_ordered_factorizations_k(12, 9, all2) == 0);
  CHECK_THROWS(count_ordered_factorizations_k(1, 1, all2));
  CHECK_THROWS(count_ordered_factorizations_k(12, 0, all2));
}

TEST_CASE("length-restricted counts match enumeration for every set") {
  for (const FactorSet& set : {all2, odd3, FactorSet::parse("list:2,3,5")}) {
    CAPTURE(set.label());
    for (std::uint64_t n = 2; n <= 3000; ++n) {
      for (unsigned k = 1; k <= big_omega(n); ++k) {
        const auto visited = for_each_ordered_factorization(n, set, k, [](std::span<const std::uint64_t>) {});
        REQUIRE(count_ordered_factorizations_k(n, k, set) == visited);
      }
    }
  }
}

TEST_CASE("layer sums and the convolution identity") {
  constexpr std::uint64_t limit = 100000;
  const auto layers = ordered_factorization_layers(limit, 17, all2);
  const auto h = oracle::hille_recursion(limit);
  for (std::uint64_t n = 2; n <= limit; ++n) {
    std::uint64_t total = 0;
    for (unsigned k = 1; k <= big_omega(n); ++k) total += layers[k][n];
    REQUIRE(total == h[n]);
  }
  // H_k = H_{k-1} * H_1 with H_1 = 1 on n >= 2.
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const auto divs = divisors(n);
    for (unsigned k = 2; k <= 14; ++k) {
      std::uint64_t conv = 0;
      for (auto d : divs)
        if (d < n) conv += layers[k - 1][d];
      REQUIRE(layers[k][n] == conv);
    }
  }
  // Truncated Dirichlet series at s = 3 approach (zeta(3) - 1)^k; k = 1 is exact.
  for (unsigned k = 2; k <= 4; ++k) {
    auto gap = [&](std::uint64_t m_max) {
      double series = 0, zeta_part = 0;
      for (std::uint64_t m = 2; m <= m_max; ++m) {
        series += static_cast<double>(layers[k][m]) / std::pow(static_cast<double>(m), 3);
        zeta_part += std::pow(static_cast<double>(m), -3);
      }
      return std::abs(series - std::pow(zeta_part, k));
    };
    CHECK(gap(1000) < gap(100));
  }
}

TEST_CASE("restricted enumeration and ceilings") {
  const auto three = enumerate_ordered_factorizations(24, all2, 3u);
  CHECK(three.size() == count_ordered_factorizations_k(24, 3, all2));
  CHECK(three.front() == OrderedFactorization{2, 2, 6});
  CHECK_THROWS_AS(enumerate_ordered_factorizations(1ULL << 20, all2, std::nullopt, 1000), ResourceLimitError);
  // 2^62 has 2^61 ordered factorizations, 2^63 - 1 is odd; 2^63 itself is out of range.
  CHECK(count_ordered_factorizations(1ULL << 62, all2) == (1ULL << 61));
  CHECK_THROWS_AS(count_ordered_factorizations(kMaxFactorizable + 1, all2), std::invalid_argument);
}

TEST_CASE("counts that do not fit report overflow") {
  // 2^27 3^11 5^4 7^2 11 < 2^63 has about 2.5e28 ordered factorizations.
  CHECK_THROWS_AS(count_ordered_factorizations(8009630236016640000ULL, all2), CountOverflowError);
  CHECK(count_ordered_factorizations((1ULL << 20) * 59049, all2) == 231114033594368ULL);
}

TEST_CASE("partitions") {
  const auto counts = oracle::partition_counts(40);
  for (unsigned m = 1; m <= 40; ++m) REQUIRE(partitions(m).size() == counts[m].get_ui());
  CHECK(partitions(10).size() == 42);
  const auto p5 = partitions(5);
  const std::vector<std::vector<unsigned>> expect = {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1},
                                                     {1, 1, 1, 1, 1}};
  REQUIRE(p5.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(p5[i].parts == expect[i]);
  CHECK(p5[3].multiplicities == std::vector<unsigned>{1, 2});
  CHECK_THROWS_AS(partitions(61), ResourceLimitError);
  CHECK(multinomial({1, 2}) == 3);
  CHECK(multinomial({2, 2}) == 6);
}

TEST_CASE("multinomial sums count weighted compositions") {
  CHECK(partition_multinomial_sum(2, 4) == 54);
  CHECK(partition_multinomial_sum(1, 3) == 4);
  for (unsigned k = 1; k <= 20; ++k)
    for (const Rational a : {Rational(1), Rational(3), Rational(1, 2), Rational(2, 7)})
      REQUIRE(partition_multinomial_sum(a, k) == a * pow(a + 1, static_cast<long>(k) - 1));
}

TEST_CASE("extremal factor sums") {
  for (std::uint64_t n = 2; n <= 600; ++n) {
    const auto brute = oracle::all_tuples(n, any);
    for (unsigned k = 1; k <= big_omega(n) + 1; ++k) {
      std::optional<std::uint64_t> lo, hi;
      for (const auto& t : brute) {
        if (t.size() != k) continue;
        std::uint64_t s = 0;
        for (auto d : t) s += d;
        lo = lo ? std::min(*lo, s) : s;
        hi = hi ? std::max(*hi, s) : s;
      }
      const auto e = factor_sum_extrema(n, k);
      REQUIRE(e.min == lo);
      REQUIRE(e.max == hi);
      if (!e.feasible()) continue;
      REQUIRE(meets_min_power_bound(*e.min, n, k));
      REQUIRE(compare_to_max_bound(*e.max, n, k) <= 0);
      REQUIRE(static_cast<double>(*e.min) >= min_factor_sum_log_bound(n) - 1e-9);
    }
  }
  CHECK(min_factor_sum(24, 3) == 9u);
  CHECK(max_factor_sum(24, 3) == 10u);
  CHECK(compare_to_max_bound(10, 24, 3) == std::strong_ordering::equal);
  CHECK_FALSE(min_factor_sum(7, 2).has_value());
  CHECK(max_factor_sum_upper_bound(24, 3) == doctest::Approx(10));
  CHECK(min_factor_sum_lower_bound(27, 3) == doctest::Approx(9));
}
