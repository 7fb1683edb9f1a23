#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dirinv/factor_set.hpp"

namespace dirinv {

using OrderedFactorization = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kDefaultTupleCeiling = 10'000'000;

/// Every (d_1, ..., d_k) with product n and each d_i in P, in lexicographic
/// order; restricted to length k when given. Throws ResourceLimitError once
/// more than `ceiling` tuples would be produced.
std::vector<OrderedFactorization> enumerate_ordered_factorizations(
    std::uint64_t n, const FactorSet& factors, std::optional<unsigned> k = std::nullopt,
    std::uint64_t ceiling = kDefaultTupleCeiling);

/// Streaming form of the enumeration; the span is only valid during the call.
/// Returns the number of tuples visited.
std::uint64_t for_each_ordered_factorization(
    std::uint64_t n, const FactorSet& factors, std::optional<unsigned> k,
    const std::function<void(std::span<const std::uint64_t>)>& visit,
    std::uint64_t ceiling = kDefaultTupleCeiling);

/// H(n, P) from the divisor recursion, with H(1, P) = 1 by convention.
/// Throws CountOverflowError rather than wrapping.
std::uint64_t count_ordered_factorizations(std::uint64_t n, const FactorSet& factors);

/// H_k(n, P): factorizations into exactly k factors. Requires n >= 2, k >= 1.
std::uint64_t count_ordered_factorizations_k(std::uint64_t n, unsigned k, const FactorSet& factors);

/// H(m, P) for all 0 <= m <= limit (entry 0 unused).
std::vector<std::uint64_t> ordered_factorization_table(std::uint64_t limit, const FactorSet& factors);

/// layers[k][m] = H_k(m, P) for 0 <= k <= max_k, with layers[0] = epsilon.
std::vector<std::vector<std::uint64_t>> ordered_factorization_layers(std::uint64_t limit, unsigned max_k,
                                                                     const FactorSet& factors);

}  // namespace dirinv
