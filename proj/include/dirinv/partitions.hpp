#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "dirinv/rational.hpp"

namespace dirinv {

/// An integer partition with parts in decreasing order, together with the
/// run lengths of equal parts (l_1, ..., l_m).
struct Partition {
  std::vector<unsigned> parts;
  std::vector<unsigned> multiplicities;

  friend bool operator==(const Partition&, const Partition&) = default;
};

inline constexpr unsigned kMaxPartitionedInteger = 60;

/// Visits partitions of m in reverse lexicographic order ((m) first,
/// (1,...,1) last). Requires m >= 1.
void for_each_partition(unsigned m, const std::function<void(const Partition&)>& visit);

/// All partitions of 1 <= m <= 60; ResourceLimitError above the ceiling.
std::vector<Partition> partitions(unsigned m);

/// l! / (l_1! ... l_m!).
mpz_class multinomial(const std::vector<unsigned>& multiplicities);

/// Sum over partitions of k of multinomial(l; l_1..l_m) A^l, which counts
/// compositions of k weighted by A^(number of parts) and equals A (A+1)^(k-1).
Rational partition_multinomial_sum(const Rational& a, unsigned k);

}  // namespace dirinv
