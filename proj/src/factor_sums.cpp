#include "dirinv/factor_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gmpxx.h>

namespace dirinv {

FactorSumExtrema factor_sum_extrema(std::uint64_t n, unsigned k, std::uint64_t ceiling) {
  if (n < 2 || k == 0) throw std::invalid_argument("factor sums need n >= 2 and k >= 1");
  FactorSumExtrema out;
  for_each_ordered_factorization(
      n, FactorSet::all_from_2(), k,
      [&](std::span<const std::uint64_t> tuple) {
        std::uint64_t sum = 0;
        for (std::uint64_t d : tuple) sum += d;
        out.min = out.min ? std::min(*out.min, sum) : sum;
        out.max = out.max ? std::max(*out.max, sum) : sum;
      },
      ceiling);
  return out;
}

std::optional<std::uint64_t> min_factor_sum(std::uint64_t n, unsigned k) { return factor_sum_extrema(n, k).min; }

std::optional<std::uint64_t> max_factor_sum(std::uint64_t n, unsigned k) { return factor_sum_extrema(n, k).max; }

double min_factor_sum_lower_bound(std::uint64_t n, unsigned k) {
  return k * std::pow(static_cast<double>(n), 1.0 / k);
}

double min_factor_sum_log_bound(std::uint64_t n) { return std::numbers::e * std::log(static_cast<double>(n)); }

double max_factor_sum_upper_bound(std::uint64_t n, unsigned k) {
  return 2.0 * (k - 1) + std::ldexp(static_cast<double>(n), -static_cast<int>(k - 1));
}

bool meets_min_power_bound(std::uint64_t sum, std::uint64_t n, unsigned k) {
  mpz_class lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), sum, k);
  mpz_ui_pow_ui(rhs.get_mpz_t(), k, k);
  rhs *= mpz_class(std::to_string(n));
  return lhs >= rhs;
}

std::strong_ordering compare_to_max_bound(std::uint64_t sum, std::uint64_t n, unsigned k) {
  // sum * 2^(k-1) against 2(k-1) 2^(k-1) + n.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, k - 1);
  const mpz_class lhs = mpz_class(std::to_string(sum)) * scale;
  const mpz_class rhs = mpz_class(2 * (k - 1)) * scale + mpz_class(std::to_string(n));
  const int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace dirinv
