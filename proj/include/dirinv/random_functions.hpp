#pragma once

#include <cstdint>

#include "dirinv/arithmetic_function.hpp"
#include "dirinv/bounds.hpp"
#include "dirinv/real.hpp"

namespace dirinv {

/// |f(n)| <= C n^g (polynomial) or <= A c^n (exponential).
class Envelope {
 public:
  static Envelope polynomial(const Rational& C, const Rational& gamma);
  static Envelope exponential(const Rational& A, const Rational& c);

  bool is_exponential() const { return exponential_; }
  bool is_exact() const;
  const Rational& scale() const { return scale_; }

  /// The envelope itself when rational, else a dyadic value just below it.
  Rational lower(std::uint64_t n) const;
  /// An upward-rounded value; equal to lower(n) when exact.
  Real upper(std::uint64_t n) const;
  /// |v| <= envelope(n), decided exactly or against upper(n).
  bool admits(const Rational& v, std::uint64_t n) const;

  /// The same shape with the leading constant replaced.
  Envelope rescaled(const Rational& scale) const;

 private:
  Envelope(bool exponential, Rational scale, Rational param)
      : exponential_(exponential), scale_(std::move(scale)), param_(std::move(param)) {}

  bool exponential_;
  Rational scale_;
  Rational param_;
};

enum class RandomStructure {
  General,                  // independent values under the envelope
  Multiplicative,           // random prime-power values
  ZeroHigherPowers,         // multiplicative, f(p^k) = 0 for k >= 2
  TotallyMultiplicative,    // random f(p)
  Submultiplicative,        // |f| submultiplicative
  Supermultiplicative,      // |f| supermultiplicative (may leave the envelope)
  SinglePrime,              // multiplicative, supported on powers of one prime
  OddSupport,               // zero at even n
  TruncatedLow,             // zero on [2, N]
  TruncatedHigh,            // zero above N
};

struct RandomOptions {
  RandomStructure structure = RandomStructure::General;
  std::uint64_t cutoff = 0;  // N for the truncated structures
  std::uint64_t prime = 2;   // for SinglePrime
};

/// f(n) = s_n r_n E(n) with s_n = +-1 and r_n = k / 2^16 in [0, 1], tabulated
/// on 2..limit and zero beyond. Equal seeds give equal functions.
ArithmeticFunction random_function(const Envelope& envelope, std::uint64_t limit, std::uint64_t seed,
                                   const RandomOptions& options = {});

/// The envelope in the hypothesis of `spec`.
Envelope envelope_for(const BoundSpec& spec);

/// A random function satisfying the hypothesis of `spec` on 2..limit.
ArithmeticFunction random_function_for(const BoundSpec& spec, std::uint64_t limit, std::uint64_t seed);

}  // namespace dirinv
