#include "dirinv/arithmetic_function.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "dirinv/number_theory.hpp"

namespace dirinv {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num));
  mpz_class q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

Rational rational_from_u64(std::uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return Rational(z);
}

Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("pow: zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -e);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  out.canonicalize();
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

struct ArithmeticFunction::Memo {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, Rational> values;
};

ArithmeticFunction::ArithmeticFunction(std::string name, Evaluator evaluator)
    : name_(std::move(name)), evaluator_(std::move(evaluator)), memo_(std::make_shared<Memo>()) {
  const Rational at_one = (*this)(1);
  if (at_one != 1) {
    throw NormalizationError("arithmetic function '" + name_ + "' has f(1) = " + to_string(at_one) +
                             "; divide by f(1) first, the inverse then scales by 1/f(1)");
  }
}

ArithmeticFunction ArithmeticFunction::from_table(std::string name, std::vector<Rational> values) {
  auto table = std::make_shared<const std::vector<Rational>>(std::move(values));
  ArithmeticFunction f(std::move(name), [table](std::uint64_t n) -> Rational {
    return n < table->size() ? (*table)[n] : Rational(0);
  });
  // Table lookups are already O(1).
  f.memo_.reset();
  return f;
}

Rational ArithmeticFunction::operator()(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("arithmetic functions are defined for n >= 1");
  if (!memo_) return evaluator_(n);
  {
    std::shared_lock lock(memo_->mutex);
    if (auto it = memo_->values.find(n); it != memo_->values.end()) return it->second;
  }
  Rational value = evaluator_(n);
  std::unique_lock lock(memo_->mutex);
  return memo_->values.try_emplace(n, std::move(value)).first->second;
}

std::vector<Rational> ArithmeticFunction::tabulate(std::uint64_t limit) const {
  std::vector<Rational> out(limit + 1);
  for (std::uint64_t n = 1; n <= limit; ++n) out[n] = (*this)(n);
  return out;
}

Rational epsilon(std::uint64_t n) { return n == 1 ? Rational(1) : Rational(0); }

Rational convolve(const ArithmeticFunction& f, const ArithmeticFunction& g, std::uint64_t n) {
  Rational sum = 0;
  for (std::uint64_t d : divisors(n)) sum += f(n / d) * g(d);
  return sum;
}

}  // namespace dirinv
