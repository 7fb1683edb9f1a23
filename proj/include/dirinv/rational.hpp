#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dirinv {

/// Exact arbitrary-precision rational; all convolution arithmetic uses it.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

Rational rational_from_u64(std::uint64_t n);

/// base^e for integer e (negative allowed when base != 0).
Rational pow(const Rational& base, long e);

bool is_integer(const Rational& q);

}  // namespace dirinv
