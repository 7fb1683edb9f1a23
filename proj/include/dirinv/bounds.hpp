#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirinv/number_theory.hpp"
#include "dirinv/rational.hpp"
#include "dirinv/real.hpp"
#include "dirinv/roots.hpp"

namespace dirinv {

enum class BoundKind {
  SubmultPoly,               // |f| submultiplicative, |f(n)| <= C n^g
  MultPoly,                  // f multiplicative, |f(n)| <= C n^g
  MultPolyZeroHigherPowers,  // ... and f(p^k) = 0 for k >= 2
  MultExp,                   // f multiplicative, |f(n)| <= A c^n, c < 1
  PrimePowerPartition,       // f multiplicative, |f(p^k)| <= A c^(p^k)
  GeneralPoly,               // |f(n)| <= C n^g
  GeneralPolyLog,            // same hypothesis, logarithmic form
  ExpSmallC,                 // |f(n)| <= A c^n, c < 1
  ExpSmallCUnitA,            // ... and A <= 1
  ExpLargeC,                 // |f(n)| <= A c^n, c > 1
  TruncatedLow,              // f = 0 on [2, N]
  TruncatedHigh,             // f = 0 above N
  OddSupport,                // f = 0 on even n
};

/// Command-line name of a kind ("generalpoly", "multpoly", ...).
std::string to_string(BoundKind kind);

/// Parameters violate the regime a kind is stated for.
class RegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BoundParams {
  Rational C = 1;
  Rational gamma = 0;
  Rational A = 1;
  Rational c = 1;
  std::uint64_t N = 0;
};

/// One of the explicit upper bounds for |f^{-1}(n)|, with its growth exponent
/// resolved at construction.
class BoundSpec {
 public:
  static BoundSpec submult_poly(const Rational& C, const Rational& gamma);
  static BoundSpec mult_poly(const Rational& C, const Rational& gamma);
  static BoundSpec mult_poly_zero_higher_powers(const Rational& C, const Rational& gamma);
  static BoundSpec mult_exp(const Rational& A, const Rational& c);
  static BoundSpec prime_power_partition(const Rational& A, const Rational& c);
  static BoundSpec general_poly(const Rational& C, const Rational& gamma);
  static BoundSpec general_poly_log(const Rational& C, const Rational& gamma);
  static BoundSpec exp_small_c(const Rational& A, const Rational& c);
  static BoundSpec exp_small_c_unit_a(const Rational& c, const Rational& A = 1);
  static BoundSpec exp_large_c(const Rational& A, const Rational& c);
  static BoundSpec truncated_low(std::uint64_t N, const Rational& C, const Rational& gamma);
  static BoundSpec truncated_high(std::uint64_t N, const Rational& C, const Rational& gamma);
  static BoundSpec odd_support(const Rational& C, const Rational& gamma);

  /// "kind:key=value,..." with keys C, g, A, c, N, e.g. "generalpoly:C=1,g=0".
  static BoundSpec parse(const std::string& text);

  BoundKind kind() const { return kind_; }
  const BoundParams& params() const { return params_; }
  /// rho, varsigma, upsilon or eta as the kind requires.
  const std::optional<GrowthExponent>& exponent() const { return exponent_; }
  /// True for the |f(n)| <= A c^n family of hypotheses.
  bool exponential_envelope() const;
  std::string label() const;

 private:
  BoundSpec(BoundKind kind, BoundParams params);

  BoundKind kind_;
  BoundParams params_;
  std::optional<GrowthExponent> exponent_;
};

/// A bound value, rounded upward; `exact` is set when the value is rational
/// and was computed without rounding.
struct BoundValue {
  Real upper;
  std::optional<Rational> exact;
  std::string form;
};

/// The chain of bounds B_1 <= B_2 <= ... stated for |f^{-1}(n)|, tightest
/// first. Requires n >= 2. `ordered_factorizations` is H(n); it is only
/// consulted by SubmultPoly.
std::vector<BoundValue> bound_chain(const BoundSpec& spec, std::uint64_t n, const PrimeFactorization& factors,
                                    std::uint64_t ordered_factorizations);
std::vector<BoundValue> bound_chain(const BoundSpec& spec, std::uint64_t n);

/// The tightest element of the chain.
BoundValue bound_value(const BoundSpec& spec, std::uint64_t n);

/// |f^{-1}(n)| <= bound, decided exactly.
bool admits(const BoundValue& bound, const Rational& abs_value);

/// abs_value / bound in binary64 (0 when both vanish, +inf for 0 < value / 0).
double bound_ratio(const BoundValue& bound, const Rational& abs_value);

/// The prime-power factor of the PrimePowerPartition bound: sum over
/// partitions phi of k of multinomial * A^l * c^(p^phi_1 + ... + p^phi_l).
Rational prime_power_partition_bound(const Rational& A, const Rational& c, std::uint64_t p, unsigned k);

/// H(n) |f(n)|, valid when |f| is supermultiplicative.
Rational supermultiplicative_bound(std::uint64_t ordered_factorizations, const Rational& f_n);

/// H(n) prod |f(p_j)|^(e_j), valid when |f| is submultiplicative.
Rational submultiplicative_bound(std::uint64_t ordered_factorizations, const PrimeFactorization& factors,
                                 const std::vector<Rational>& f_at_primes);

}  // namespace dirinv
