#pragma once

#include <cstdint>
#include <stdexcept>

#include "dirinv/factor_set.hpp"

namespace dirinv {

/// s at or below the abscissa of convergence of the requested series.
class ZetaDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kMinZetaArgument = 1.0 + 1e-6;

struct ZetaEstimate {
  double value;
  /// Rigorous bound on |value - true sum| (truncation plus rounding).
  double error_bound;
};

/// Sum over m >= start of m^-s: terms below `cutoff` summed directly, the rest
/// by Euler-Maclaurin with `terms` Bernoulli corrections (at most 11).
/// The truncation error is bounded by the first omitted correction.
ZetaEstimate zeta_tail_estimate(double s, std::uint64_t start, std::uint64_t cutoff, unsigned terms);

/// Sum over m >= start of m^-s to within `tolerance`, cutoff chosen adaptively.
double zeta_tail(double s, std::uint64_t start, double tolerance = 1e-12);

/// Riemann zeta for real s >= 1 + 1e-6.
double zeta_real(double s, double tolerance = 1e-12);

/// zeta_P(s) = sum over m in P of m^-s.
///   AllFrom2: zeta(s) - 1; OddFrom3: (1 - 2^-s) zeta(s) - 1; finite sets: the
///   finite sum for any real s. Predicate sets are summed up to their horizon,
///   which is a truncation rather than a certified value.
double zeta_factor_set(const FactorSet& factors, double s, double tolerance = 1e-12);

/// 1 for the infinite builtin sets, -infinity for finite or truncated sets.
double convergence_abscissa(const FactorSet& factors);

}  // namespace dirinv
