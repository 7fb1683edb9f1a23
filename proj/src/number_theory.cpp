#include "dirinv/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dirinv {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

constexpr std::uint32_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Pollard-Brent; n is odd, composite, and free of tiny factors.
std::uint64_t find_factor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t block = 128;
    std::uint64_t r = 1;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += block;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = find_factor(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

PrimeFactorization group(std::vector<std::uint64_t>& primes) {
  std::sort(primes.begin(), primes.end());
  PrimeFactorization out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kSmallPrimes) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFactorization factorize(std::uint64_t n) {
  if (n == 0 || n > kMaxFactorizable) {
    throw std::invalid_argument("factorize: n must lie in [1, 2^63-1]");
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  return group(primes);
}

std::uint64_t reconstruct(const PrimeFactorization& factors) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) n *= p;
  }
  return n;
}

unsigned big_omega(const PrimeFactorization& factors) {
  unsigned total = 0;
  for (const auto& pe : factors) total += pe.exponent;
  return total;
}

unsigned small_omega(const PrimeFactorization& factors) {
  return static_cast<unsigned>(factors.size());
}

std::uint64_t tau(const PrimeFactorization& factors) {
  std::uint64_t count = 1;
  for (const auto& pe : factors) count *= pe.exponent + 1;
  return count;
}

int mobius(const PrimeFactorization& factors) {
  for (const auto& pe : factors) {
    if (pe.exponent > 1) return 0;
  }
  return factors.size() % 2 == 0 ? 1 : -1;
}

unsigned big_omega(std::uint64_t n) { return big_omega(factorize(n)); }
unsigned small_omega(std::uint64_t n) { return small_omega(factorize(n)); }
std::uint64_t tau(std::uint64_t n) { return tau(factorize(n)); }
int mobius(std::uint64_t n) { return mobius(factorize(n)); }

std::vector<std::uint64_t> divisors(const PrimeFactorization& factors) {
  std::vector<std::uint64_t> out{1};
  out.reserve(tau(factors));
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

SmallestPrimeFactorSieve::SmallestPrimeFactorSieve(std::uint32_t limit)
    : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

PrimeFactorization SmallestPrimeFactorSieve::factorize(std::uint32_t n) const {
  if (n == 0 || n > limit_) {
    throw std::out_of_range("SmallestPrimeFactorSieve: n outside sieve range");
  }
  PrimeFactorization out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

}  // namespace dirinv
