#include "dirinv/inverse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dirinv/errors.hpp"
#include "dirinv/number_theory.hpp"

namespace dirinv {

const Rational& InverseTable::at(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw std::out_of_range("inverse table holds 1.." + std::to_string(limit_) + ", asked for " + std::to_string(n));
  }
  return values_[n];
}

namespace {

std::vector<Rational> invert_tabulated(const std::vector<Rational>& f, std::uint64_t limit) {
  std::vector<Rational> inv(limit + 1);
  // acc[m] collects sum of f(m/d) inv(d) over proper divisors d already final.
  std::vector<Rational> acc(limit + 1);
  mpq_class product;
  for (std::uint64_t d = 1; d <= limit; ++d) {
    if (d == 1) {
      inv[1] = 1;
    } else {
      mpq_neg(inv[d].get_mpq_t(), acc[d].get_mpq_t());
      acc[d] = 0;
    }
    if (sgn(inv[d]) == 0) continue;
    for (std::uint64_t k = 2, m = 2 * d; m <= limit; ++k, m += d) {
      if (sgn(f[k]) == 0) continue;
      mpq_mul(product.get_mpq_t(), f[k].get_mpq_t(), inv[d].get_mpq_t());
      mpq_add(acc[m].get_mpq_t(), acc[m].get_mpq_t(), product.get_mpq_t());
    }
  }
  return inv;
}

}  // namespace

InverseTable inverse_recursive(const ArithmeticFunction& f, std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("inverse table limit must be >= 1");
  return InverseTable(limit, invert_tabulated(f.tabulate(limit), limit));
}

InverseTable inverse_recursive_unnormalized(const std::function<Rational(std::uint64_t)>& g, std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("inverse table limit must be >= 1");
  const Rational a = g(1);
  if (sgn(a) == 0) throw std::invalid_argument("g(1) = 0: g has no Dirichlet inverse");
  std::vector<Rational> normalized(limit + 1);
  for (std::uint64_t n = 1; n <= limit; ++n) normalized[n] = g(n) / a;
  std::vector<Rational> inv = invert_tabulated(normalized, limit);
  for (auto& v : inv) v /= a;
  return InverseTable(limit, std::move(inv));
}

namespace {

class SignedProductSum {
 public:
  SignedProductSum(std::vector<std::uint64_t> divisors, std::vector<Rational> values)
      : divisors_(std::move(divisors)), values_(std::move(values)), products_(64) {}

  Rational run() {
    products_[0] = 1;
    visit(divisors_.size() - 1, 0);
    return total_;
  }

 private:
  // remaining = divisors_[index]; products_[depth] = f(d_1)...f(d_depth).
  void visit(std::size_t index, std::size_t depth) {
    const std::uint64_t remaining = divisors_[index];
    for (std::size_t j = 1; j <= index; ++j) {
      const std::uint64_t d = divisors_[j];
      if (remaining % d != 0 || sgn(values_[j]) == 0) continue;
      mpq_mul(products_[depth + 1].get_mpq_t(), products_[depth].get_mpq_t(), values_[j].get_mpq_t());
      if (d == remaining) {
        // Tuple of length depth + 1 contributes with sign (-1)^(depth+1).
        if (depth % 2 == 0) {
          total_ -= products_[depth + 1];
        } else {
          total_ += products_[depth + 1];
        }
      } else {
        const auto next = std::lower_bound(divisors_.begin(), divisors_.end(), remaining / d);
        visit(static_cast<std::size_t>(next - divisors_.begin()), depth + 1);
      }
    }
  }

  std::vector<std::uint64_t> divisors_;
  std::vector<Rational> values_;
  std::vector<Rational> products_;
  Rational total_ = 0;
};

}  // namespace

Rational inverse_sum_formula(const ArithmeticFunction& f, std::uint64_t n, const SumFormulaOptions& options) {
  if (n < 2) throw std::invalid_argument("the sum formula applies to n >= 2");
  const std::uint64_t tuples = count_ordered_factorizations(n, FactorSet::all_from_2());
  if (tuples > options.tuple_ceiling) {
    throw ResourceLimitError("H(" + std::to_string(n) + ") = " + std::to_string(tuples) +
                             " ordered factorizations exceeds the ceiling " + std::to_string(options.tuple_ceiling));
  }
  std::vector<std::uint64_t> ds = divisors(n);
  std::vector<Rational> values(ds.size());
  for (std::size_t i = 1; i < ds.size(); ++i) values[i] = f(ds[i]);
  return SignedProductSum(std::move(ds), std::move(values)).run();
}

std::vector<Rational> inverse_prime_power_sequence(const ArithmeticFunction& f, std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::vector<Rational> f_pow(k + 1);
  std::uint64_t power = 1;
  for (unsigned j = 1; j <= k; ++j) {
    if (power > kMaxFactorizable / p) {
      throw std::invalid_argument("prime power " + std::to_string(p) + "^" + std::to_string(k) + " overflows");
    }
    power *= p;
    f_pow[j] = f(power);
  }
  std::vector<Rational> inv(k + 1);
  inv[0] = 1;
  for (unsigned j = 1; j <= k; ++j) {
    Rational sum = 0;
    for (unsigned m = 0; m < j; ++m) sum += f_pow[j - m] * inv[m];
    inv[j] = -sum;
  }
  return inv;
}

Rational inverse_prime_power(const ArithmeticFunction& f, std::uint64_t p, unsigned k) {
  if (k == 0) throw std::invalid_argument("prime power exponent must be >= 1");
  return inverse_prime_power_sequence(f, p, k)[k];
}

Rational inverse_multiplicative(const ArithmeticFunction& f, std::uint64_t n) {
  Rational out = 1;
  for (const auto& [p, e] : factorize(n)) out *= inverse_prime_power(f, p, e);
  return out;
}

Rational inverse_totally_multiplicative(const ArithmeticFunction& f, std::uint64_t n) {
  return mobius(n) * f(n);
}

}  // namespace dirinv
