#include "dirinv/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace dirinv {
namespace {

// B_2, B_4, ..., B_24.
constexpr std::array<long double, 12> kBernoulli = {
    1.0L / 6,        -1.0L / 30,          1.0L / 42,   -1.0L / 30,         5.0L / 66,  -691.0L / 2730,
    7.0L / 6,        -3617.0L / 510,      43867.0L / 798, -174611.0L / 330, 854513.0L / 138,
    -236364091.0L / 2730,
};

constexpr unsigned kMaxCorrections = kBernoulli.size() - 1;

void require_convergent(double s) {
  if (!(s >= kMinZetaArgument)) {
    throw ZetaDomainError("zeta series needs s >= 1 + 1e-6, got " + std::to_string(s));
  }
}

}  // namespace

ZetaEstimate zeta_tail_estimate(double s, std::uint64_t start, std::uint64_t cutoff, unsigned terms) {
  require_convergent(s);
  if (start == 0) throw std::invalid_argument("zeta tail starts at m >= 1");
  if (terms > kMaxCorrections) terms = kMaxCorrections;
  if (cutoff < start) cutoff = start;
  const long double ls = s;

  long double direct = 0;
  for (std::uint64_t m = cutoff - 1; m >= start && m > 0; --m) direct += std::pow(static_cast<long double>(m), -ls);

  const long double big_m = static_cast<long double>(cutoff);
  const long double m_pow = std::pow(big_m, -ls);
  long double tail = big_m * m_pow / (ls - 1) + m_pow / 2;
  // Running value of (s)_(2j-1) M^(-s-2j+1) / (2j)!.
  long double factor = ls * m_pow / big_m / 2;
  long double next_term = 0;
  for (unsigned j = 1; j <= terms + 1; ++j) {
    const long double term = kBernoulli[j - 1] * factor;
    if (j <= terms) {
      tail += term;
    } else {
      next_term = std::fabs(term);
    }
    // Advance (s)_(2j-1)/(2j)! M^(...) to (s)_(2j+1)/(2j+2)! M^(... - 2).
    factor *= (ls + 2 * j - 1) * (ls + 2 * j) / ((2.0L * j + 1) * (2.0L * j + 2)) / (big_m * big_m);
  }
  const long double value = direct + tail;
  const long double rounding =
      4 * std::numeric_limits<long double>::epsilon() * (static_cast<long double>(cutoff - start + 8)) * std::fabs(value);
  return {static_cast<double>(value), static_cast<double>(next_term + rounding) +
                                          std::numeric_limits<double>::epsilon() * std::fabs(static_cast<double>(value))};
}

double zeta_tail(double s, std::uint64_t start, double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("zeta tolerance must be positive");
  std::uint64_t cutoff = std::max<std::uint64_t>(start, 16);
  for (int attempt = 0; attempt < 24; ++attempt) {
    const ZetaEstimate e = zeta_tail_estimate(s, start, cutoff, kMaxCorrections);
    if (e.error_bound <= tolerance) return e.value;
    cutoff *= 2;
  }
  throw std::runtime_error("zeta tolerance " + std::to_string(tolerance) + " unreachable at s = " + std::to_string(s));
}

double zeta_real(double s, double tolerance) { return zeta_tail(s, 1, tolerance); }

double zeta_factor_set(const FactorSet& factors, double s, double tolerance) {
  switch (factors.kind()) {
    case FactorSet::Kind::AllFrom2:
      return zeta_tail(s, 2, tolerance);
    case FactorSet::Kind::OddFrom3:
      return (1 - std::exp2(-s)) * zeta_real(s, tolerance) - 1;
    case FactorSet::Kind::ExplicitFinite: {
      long double sum = 0;
      for (std::uint64_t m : factors.members()) sum += std::pow(static_cast<long double>(m), -static_cast<long double>(s));
      return static_cast<double>(sum);
    }
    case FactorSet::Kind::PredicateTruncated: {
      long double sum = 0;
      for (std::uint64_t m = 2; m <= factors.horizon(); ++m) {
        if (factors.contains(m)) sum += std::pow(static_cast<long double>(m), -static_cast<long double>(s));
      }
      return static_cast<double>(sum);
    }
  }
  return 0;
}

double convergence_abscissa(const FactorSet& factors) {
  switch (factors.kind()) {
    case FactorSet::Kind::AllFrom2:
    case FactorSet::Kind::OddFrom3:
      return 1.0;
    default:
      return -std::numeric_limits<double>::infinity();
  }
}

}  // namespace dirinv
