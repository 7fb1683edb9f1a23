#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dirinv/arithmetic_function.hpp"

namespace dirinv {

enum class MultiplicativityClass {
  TotallyMultiplicative,
  Multiplicative,
  SupermultiplicativeAbs,
  SubmultiplicativeAbs,
};

std::string to_string(MultiplicativityClass c);

struct PropertyCheck {
  bool holds = true;
  /// First (m, n), scanning m ascending then n ascending, where it fails.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample;
};

struct MultiplicativityReport {
  std::uint64_t limit = 0;
  PropertyCheck totally_multiplicative;
  PropertyCheck multiplicative;
  PropertyCheck supermultiplicative_abs;
  PropertyCheck submultiplicative_abs;

  /// Every class that holds; empty means "none".
  std::vector<MultiplicativityClass> holding() const;
};

/// Exhaustive scan over all pairs 2 <= m <= n with m * n <= limit. Pairs with
/// a factor 1 hold trivially because f(1) = 1.
MultiplicativityReport check_multiplicativity(const ArithmeticFunction& f, std::uint64_t limit);

}  // namespace dirinv
