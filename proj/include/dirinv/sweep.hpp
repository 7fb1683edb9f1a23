#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirinv/arithmetic_function.hpp"
#include "dirinv/bounds.hpp"

namespace dirinv {

/// f does not satisfy the hypothesis of a bound; `witness` is the first n
/// (or m * n for pair properties) where it fails.
class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation(const std::string& what, std::uint64_t witness)
      : std::runtime_error(what), witness_(witness) {}
  std::uint64_t witness() const { return witness_; }

 private:
  std::uint64_t witness_;
};

/// Throws HypothesisViolation unless f meets the hypothesis of `spec` on 2..limit.
void check_hypothesis(const BoundSpec& spec, const ArithmeticFunction& f, std::uint64_t limit);

enum class SweepMode { Exhaustive, RandomSample };

struct SweepOptions {
  SweepMode mode = SweepMode::Exhaustive;
  std::size_t sample_size = 1000;
  std::uint64_t seed = 0;
  /// 0 picks default_thread_count().
  unsigned threads = 0;
  bool check_hypothesis = true;
};

struct BoundReport {
  std::uint64_t n = 0;
  Rational inverse_abs;
  BoundValue bound;
  double ratio = 0;
  bool pass = true;
};

struct SweepSummary {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  double max_ratio = 0;
  std::uint64_t argmax = 0;
  std::optional<std::uint64_t> first_failure;
  /// explargec only: smallest A~ with |f^{-1}(n)| <= A~ c^n on the range.
  std::optional<Real> fitted_constant;
};

struct SweepResult {
  std::string spec;
  std::string function;
  std::vector<BoundReport> reports;
  SweepSummary summary;
};

/// Bound chains at a fixed set of points, shared by sweeps of one spec.
class BoundTable {
 public:
  /// `points` must be ascending, each >= 2 and below 2^32.
  BoundTable(const BoundSpec& spec, std::vector<std::uint64_t> points, unsigned threads = 0);
  static BoundTable range(const BoundSpec& spec, std::uint64_t lo, std::uint64_t hi, unsigned threads = 0);

  const BoundSpec& spec() const { return spec_; }
  const std::vector<std::uint64_t>& points() const { return points_; }
  const std::vector<BoundValue>& chain(std::size_t i) const { return chains_[i]; }

 private:
  BoundSpec spec_;
  std::vector<std::uint64_t> points_;
  std::vector<std::vector<BoundValue>> chains_;
};

/// Compares |f^{-1}(n)| with every bound of the chain for n in [lo, hi]
/// (lo >= 2). A report passes when all chain members admit the value; its
/// `bound` is the tightest one. Reports are ordered by n.
SweepResult verify_sweep(const BoundSpec& spec, const ArithmeticFunction& f, std::uint64_t lo, std::uint64_t hi,
                         const SweepOptions& options = {});

/// Same, at the table's points; options.mode and sample_size are ignored.
SweepResult verify_sweep(const BoundTable& bounds, const ArithmeticFunction& f, const SweepOptions& options = {});

/// Threads used for sweeps: DIRINV_THREADS if set to a positive integer, else
/// the hardware concurrency.
unsigned default_thread_count();

}  // namespace dirinv
