#pragma once

#include <compare>
#include <cstdint>
#include <optional>

#include "dirinv/factorizations.hpp"

namespace dirinv {

/// Extremal factor sums d_1 + ... + d_k over ordered factorizations of n
/// into exactly k factors >= 2. An empty optional is the sentinel for an
/// empty feasible set: +infinity for the minimum, -infinity for the maximum.
struct FactorSumExtrema {
  std::optional<std::uint64_t> min;
  std::optional<std::uint64_t> max;

  bool feasible() const { return min.has_value(); }
};

/// Exact extrema by enumeration. Requires n >= 2, k >= 1.
FactorSumExtrema factor_sum_extrema(std::uint64_t n, unsigned k, std::uint64_t ceiling = kDefaultTupleCeiling);

std::optional<std::uint64_t> min_factor_sum(std::uint64_t n, unsigned k);
std::optional<std::uint64_t> max_factor_sum(std::uint64_t n, unsigned k);

/// k n^(1/k), the real relaxation of the minimum.
double min_factor_sum_lower_bound(std::uint64_t n, unsigned k);
/// e ln n, the minimum of x n^(1/x) over real x > 0.
double min_factor_sum_log_bound(std::uint64_t n);
/// 2(k-1) + n / 2^(k-1).
double max_factor_sum_upper_bound(std::uint64_t n, unsigned k);

/// Exact test of sum >= k n^(1/k), i.e. sum^k >= n k^k.
bool meets_min_power_bound(std::uint64_t sum, std::uint64_t n, unsigned k);

/// Exact comparison of sum against 2(k-1) + n / 2^(k-1).
std::strong_ordering compare_to_max_bound(std::uint64_t sum, std::uint64_t n, unsigned k);

}  // namespace dirinv
