#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dirinv/arithmetic_function.hpp"
#include "dirinv/factorizations.hpp"

namespace dirinv {

/// Exact values of a Dirichlet inverse on 1..limit.
class InverseTable {
 public:
  InverseTable(std::uint64_t limit, std::vector<Rational> values) : limit_(limit), values_(std::move(values)) {}

  std::uint64_t limit() const { return limit_; }
  const Rational& operator[](std::uint64_t n) const { return values_[n]; }
  const Rational& at(std::uint64_t n) const;
  /// Index 0 is unused.
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::uint64_t limit_;
  std::vector<Rational> values_;
};

/// f^{-1}(n) = -sum_{d | n, d < n} f(n/d) f^{-1}(d), tabulated for n <= limit.
/// Cost is O(sum of tau(n)) rational multiply-adds.
InverseTable inverse_recursive(const ArithmeticFunction& f, std::uint64_t limit);

/// Inverse of a function with g(1) = a != 0, via (a f)^{-1} = f^{-1} / a.
/// Throws std::invalid_argument when g(1) = 0.
InverseTable inverse_recursive_unnormalized(const std::function<Rational(std::uint64_t)>& g, std::uint64_t limit);

struct SumFormulaOptions {
  /// Refuse n whose ordered factorization count H(n) exceeds this.
  std::uint64_t tuple_ceiling = kDefaultTupleCeiling;
};

/// Non-recurrent route: sum over k of (-1)^k times the sum of f(d_1)...f(d_k)
/// over ordered factorizations of n with all d_i >= 2. Requires n >= 2.
Rational inverse_sum_formula(const ArithmeticFunction& f, std::uint64_t n, const SumFormulaOptions& options = {});

/// f^{-1}(p^m) for m = 0..k using only values of f on powers of p.
/// Throws std::invalid_argument if p is not prime or p^k overflows.
std::vector<Rational> inverse_prime_power_sequence(const ArithmeticFunction& f, std::uint64_t p, unsigned k);

Rational inverse_prime_power(const ArithmeticFunction& f, std::uint64_t p, unsigned k);

/// Product of inverse_prime_power over the prime powers of n. Correct only
/// when f is multiplicative; the caller asserts that.
Rational inverse_multiplicative(const ArithmeticFunction& f, std::uint64_t n);

/// mu(n) f(n); correct only for totally multiplicative f.
Rational inverse_totally_multiplicative(const ArithmeticFunction& f, std::uint64_t n);

}  // namespace dirinv
