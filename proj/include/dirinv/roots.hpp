#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dirinv/factor_set.hpp"
#include "dirinv/rational.hpp"

namespace dirinv {

class RootNotBracketed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ToleranceUnachievable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A zeta-type equation whose residual is strictly decreasing in s.
class ZetaEquation {
 public:
  enum class Kind { FullZetaEquals, OddZetaEquals, TruncatedLow, FiniteSet, GenericFactorSet };

  /// zeta(s) = target.
  static ZetaEquation full_zeta_equals(const Rational& target);
  /// (1 - 2^-s) zeta(s) = target.
  static ZetaEquation odd_zeta_equals(const Rational& target);
  /// zeta(s) = 1/C + sum_{m <= N} m^-s, i.e. sum_{m > N} m^-s = 1/C.
  static ZetaEquation truncated_low(std::uint64_t n, const Rational& c);
  /// sum_{m=2}^{N} m^-s = 1/C; solvable for every real s.
  static ZetaEquation finite_set(std::uint64_t n, const Rational& c);
  /// zeta_P(s) = target.
  static ZetaEquation factor_set(FactorSet factors, const Rational& target);

  Kind kind() const { return kind_; }
  /// Residual at s (left side minus right side), accurate to `eval_tolerance`.
  double residual(double s, double eval_tolerance) const;
  /// Left end of the domain where the series converges (-inf if finite).
  double abscissa() const;
  const std::string& description() const { return description_; }

 private:
  ZetaEquation() = default;

  Kind kind_ = Kind::FullZetaEquals;
  double target_ = 0;
  std::uint64_t n_ = 0;
  std::optional<FactorSet> factors_;
  std::string description_;
};

/// A certified root: the residual is positive at lo and negative at hi.
struct GrowthExponent {
  double value = 0;
  double lo = 0;
  double hi = 0;
  /// Set when the enclosure contains s = 0 (finite sets only); value is then 0.
  bool boundary = false;
  std::string equation;
};

struct SolveOptions {
  double tolerance = 1e-9;
  double eval_tolerance = 1e-12;
};

/// Bracket from [1 + 1e-3, 64] (widened on demand), then bisect to
/// hi - lo <= tolerance.
GrowthExponent solve(const ZetaEquation& equation, const SolveOptions& options = {});

/// rho(P): the root of zeta_P(s) = 1.
GrowthExponent growth_exponent(const FactorSet& factors, const SolveOptions& options = {});

/// Parses the command-line forms zeta2, odd2, varsigma:C, upsilon:A,c,
/// trunclow:N,C, finite:N,C, oddsigma:C.
ZetaEquation parse_equation(const std::string& text);

}  // namespace dirinv
