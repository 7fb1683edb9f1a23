#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirinv/rational.hpp"

namespace dirinv {

/// Raised when f(1) != 1. Dividing f by a = f(1) fixes it, and then
/// (a f)^{-1} = f^{-1} / a.
class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational-valued arithmetic function normalized to f(1) = 1.
///
/// Values are memoized; copies share the memo, which is guarded for concurrent
/// use. The evaluator must be deterministic.
class ArithmeticFunction {
 public:
  using Evaluator = std::function<Rational(std::uint64_t)>;

  ArithmeticFunction(std::string name, Evaluator evaluator);

  /// Function given by a table of values for 1..values.size()-1 and zero
  /// beyond it. values[0] is ignored.
  static ArithmeticFunction from_table(std::string name, std::vector<Rational> values);

  Rational operator()(std::uint64_t n) const;

  /// Values at 0..limit; index 0 holds 0.
  std::vector<Rational> tabulate(std::uint64_t limit) const;

  const std::string& name() const { return name_; }

 private:
  struct Memo;
  std::string name_;
  Evaluator evaluator_;
  std::shared_ptr<Memo> memo_;
};

/// Identity of Dirichlet convolution: 1 at n = 1, else 0.
Rational epsilon(std::uint64_t n);

/// (f * g)(n) = sum over d | n of f(n/d) g(d).
Rational convolve(const ArithmeticFunction& f, const ArithmeticFunction& g, std::uint64_t n);

}  // namespace dirinv
