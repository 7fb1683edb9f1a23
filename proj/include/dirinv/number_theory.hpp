#pragma once

#include <cstdint>
#include <vector>

namespace dirinv {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization, ascending by prime. Empty for n = 1.
using PrimeFactorization = std::vector<PrimePower>;

inline constexpr std::uint64_t kMaxFactorizable = 0x7fffffffffffffffULL;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument for n == 0 or n > 2^63 - 1.
PrimeFactorization factorize(std::uint64_t n);

std::uint64_t reconstruct(const PrimeFactorization& factors);

unsigned big_omega(const PrimeFactorization& factors);
unsigned small_omega(const PrimeFactorization& factors);
std::uint64_t tau(const PrimeFactorization& factors);
int mobius(const PrimeFactorization& factors);

unsigned big_omega(std::uint64_t n);
unsigned small_omega(std::uint64_t n);
std::uint64_t tau(std::uint64_t n);
int mobius(std::uint64_t n);

/// All divisors in ascending order.
std::vector<std::uint64_t> divisors(const PrimeFactorization& factors);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Smallest-prime-factor table for fast factorization of every n <= limit.
class SmallestPrimeFactorSieve {
 public:
  explicit SmallestPrimeFactorSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::uint32_t smallest_prime_factor(std::uint32_t n) const { return spf_[n]; }
  PrimeFactorization factorize(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace dirinv
