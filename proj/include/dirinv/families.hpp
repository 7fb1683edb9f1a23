#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dirinv/arithmetic_function.hpp"

namespace dirinv {

/// The functions whose inverses are known in closed form and show that the
/// bounds cannot be improved.
enum class FamilyKind {
  TwoOnly,                // f(2) = -1, zero elsewhere
  Hille,                  // f(n) = -1 for n >= 2
  NegativePower,          // f(n) = -n^g
  PowerOfTwoPolynomial,   // f(2^k) = -C 2^(k g), zero off powers of two
  TwoOnlyExponential,     // f(2) = -A c^2, zero elsewhere
  PowerOfTwoExponential,  // f(2^k) = -A c^(2^k), zero off powers of two
};

struct FamilyParams {
  Rational C = 1;
  Rational gamma = 0;
  Rational A = 1;
  Rational c = 1;
};

struct ExtremalFamily {
  FamilyKind kind;
  FamilyParams params;
  ArithmeticFunction function;
  /// Closed-form f^{-1}(n); empty when only the leading term is known.
  std::function<Rational(std::uint64_t)> known_inverse;
  std::string label;
};

/// gamma must be an integer for the polynomial families so that values stay rational.
ExtremalFamily extremal_family(FamilyKind kind, const FamilyParams& params = {});

/// "twoonly", "hille", "negpow:g=G", "pow2:C=..,g=..", "exp2:A=..,c=..",
/// "exppow2:A=..,c=..".
ExtremalFamily parse_family(const std::string& text);

struct FamilyInfo {
  std::string name;
  std::string parameters;
  std::string definition;
};

std::vector<FamilyInfo> list_families();

}  // namespace dirinv
