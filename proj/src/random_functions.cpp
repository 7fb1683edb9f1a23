#include "dirinv/random_functions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "dirinv/number_theory.hpp"

namespace dirinv {
namespace {

constexpr unsigned long kDenominatorBits = 16;
constexpr std::uint64_t kDenominator = 1ULL << kDenominatorBits;

// C n^g rounded toward zero to a 32-bit mantissa; every MPFR step rounds down,
// so the result never exceeds the true value.
Rational dyadic_below(const Rational& C, std::uint64_t n, const Rational& gamma) {
  mpfr_t x, g;
  mpfr_inits2(64, x, g, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(g, gamma.get_mpq_t(), MPFR_RNDN);
  mpfr_set_ui(x, n, MPFR_RNDN);
  // Bracket the rounding of g itself: use the smaller exponent for n >= 1.
  if (mpfr_cmp_q(g, gamma.get_mpq_t()) > 0) mpfr_nextbelow(g);
  mpfr_pow(x, x, g, MPFR_RNDD);
  mpfr_mul_q(x, x, C.get_mpq_t(), MPFR_RNDD);
  mpfr_prec_round(x, 32, MPFR_RNDD);
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  mpfr_clears(x, g, static_cast<mpfr_ptr>(nullptr));
  return q;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // s r with s = +-1 and r = k / 2^16, k uniform on 0..2^16.
  Rational signed_fraction() {
    const std::uint64_t word = rng_();
    const std::uint64_t k = (word >> 1) % (kDenominator + 1);
    Rational r(mpz_class(static_cast<unsigned long>(k)), mpz_class(static_cast<unsigned long>(kDenominator)));
    r.canonicalize();
    return (word & 1) ? Rational(-r) : r;
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Rational> independent(const Envelope& env, std::uint64_t limit, Sampler& s) {
  std::vector<Rational> v(limit + 1);
  v[1] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) v[n] = s.signed_fraction() * env.lower(n);
  return v;
}

// Multiplicative extension from prime-power values.
std::vector<Rational> multiplicative(std::uint64_t limit, const std::function<Rational(std::uint64_t, unsigned, std::uint64_t)>& at) {
  std::vector<Rational> v(limit + 1);
  if (limit >= 1) v[1] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    Rational prod = 1;
    for (const auto& [p, e] : factorize(n)) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      prod *= at(p, e, q);
      if (sgn(prod) == 0) break;
    }
    v[n] = prod;
  }
  return v;
}

}  // namespace

Envelope Envelope::polynomial(const Rational& C, const Rational& gamma) {
  if (sgn(C) <= 0) throw std::invalid_argument("envelope constant must be positive");
  return Envelope(false, C, gamma);
}

Envelope Envelope::exponential(const Rational& A, const Rational& c) {
  if (sgn(A) <= 0 || sgn(c) <= 0) throw std::invalid_argument("envelope constants must be positive");
  return Envelope(true, A, c);
}

bool Envelope::is_exact() const { return exponential_ || is_integer(param_); }

Rational Envelope::lower(std::uint64_t n) const {
  if (exponential_) return scale_ * pow(param_, static_cast<long>(n));
  if (is_integer(param_)) return scale_ * pow(rational_from_u64(n), param_.get_num().get_si());
  return dyadic_below(scale_, n, param_);
}

Real Envelope::upper(std::uint64_t n) const {
  if (is_exact()) return to_real(lower(n));
  return round_up(to_real(scale_) * pow(to_real(rational_from_u64(n)), to_real(param_)));
}

bool Envelope::admits(const Rational& v, std::uint64_t n) const {
  const Rational a = abs(v);
  if (is_exact()) return a <= lower(n);
  // Clear cases in binary64 with a margin far above its rounding error.
  const double approx = scale_.get_d() * std::pow(static_cast<double>(n), param_.get_d());
  const double value = a.get_d();
  if (std::isfinite(approx) && approx > 0 && value < approx * (1 - 1e-9)) return true;
  return compare(upper(n), a) >= 0;
}

Envelope Envelope::rescaled(const Rational& scale) const { return Envelope(exponential_, scale, param_); }

ArithmeticFunction random_function(const Envelope& env, std::uint64_t limit, std::uint64_t seed,
                                   const RandomOptions& options) {
  Sampler s(seed);
  std::vector<Rational> v;
  const Rational unit = 1;
  switch (options.structure) {
    case RandomStructure::General:
      v = independent(env, limit, s);
      break;
    case RandomStructure::OddSupport:
      v = independent(env, limit, s);
      for (std::uint64_t n = 2; n <= limit; n += 2) v[n] = 0;
      break;
    case RandomStructure::TruncatedLow:
      v = independent(env, limit, s);
      for (std::uint64_t n = 2; n <= std::min(limit, options.cutoff); ++n) v[n] = 0;
      break;
    case RandomStructure::TruncatedHigh:
      v = independent(env, std::min(limit, options.cutoff), s);
      v.resize(limit + 1);
      break;
    case RandomStructure::Multiplicative:
    case RandomStructure::ZeroHigherPowers: {
      if (env.is_exponential()) throw std::invalid_argument("multiplicative sampling needs a polynomial envelope");
      // Odd primes use min(C, 1) so products stay under C n^g.
      const Envelope odd = env.rescaled(std::min(env.scale(), unit));
      const bool zero_higher = options.structure == RandomStructure::ZeroHigherPowers;
      std::map<std::uint64_t, Rational> cache;
      v = multiplicative(limit, [&](std::uint64_t p, unsigned e, std::uint64_t q) {
        if (zero_higher && e >= 2) return Rational(0);
        auto it = cache.find(q);
        if (it == cache.end()) {
          Sampler local(seed ^ (q * 0x9E3779B97F4A7C15ULL));
          it = cache.emplace(q, local.signed_fraction() * (p == 2 ? env : odd).lower(q)).first;
        }
        return it->second;
      });
      break;
    }
    case RandomStructure::TotallyMultiplicative: {
      if (env.is_exponential()) throw std::invalid_argument("multiplicative sampling needs a polynomial envelope");
      const Envelope per_prime = env.rescaled(std::min(env.scale(), unit));
      std::map<std::uint64_t, Rational> at_prime;
      v = multiplicative(limit, [&](std::uint64_t p, unsigned e, std::uint64_t) {
        auto it = at_prime.find(p);
        if (it == at_prime.end()) {
          Sampler local(seed ^ (p * 0x9E3779B97F4A7C15ULL));
          it = at_prime.emplace(p, local.signed_fraction() * per_prime.lower(p)).first;
        }
        return pow(it->second, static_cast<long>(e));
      });
      break;
    }
    case RandomStructure::SinglePrime: {
      const std::uint64_t p = options.prime;
      if (!is_prime(p)) throw std::invalid_argument("single-prime support needs a prime");
      v.assign(limit + 1, Rational(0));
      if (limit >= 1) v[1] = 1;
      for (std::uint64_t q = p; q <= limit; q *= p) {
        v[q] = s.signed_fraction() * env.lower(q);
        if (q > limit / p) break;
      }
      break;
    }
    case RandomStructure::Submultiplicative:
    case RandomStructure::Supermultiplicative: {
      const bool sub = options.structure == RandomStructure::Submultiplicative;
      v = independent(env, limit, s);
      std::vector<Rational> mag(limit + 1);
      for (std::uint64_t n = 1; n <= limit; ++n) mag[n] = abs(v[n]);
      // Ascending n: every proper divisor is already closed.
      for (std::uint64_t n = 4; n <= limit; ++n) {
        for (std::uint64_t d = 2; d * d <= n; ++d) {
          if (n % d != 0) continue;
          const Rational prod = mag[d] * mag[n / d];
          if (sub ? prod < mag[n] : prod > mag[n]) mag[n] = prod;
        }
      }
      for (std::uint64_t n = 2; n <= limit; ++n) v[n] = sgn(v[n]) < 0 ? Rational(-mag[n]) : mag[n];
      break;
    }
  }
  return ArithmeticFunction::from_table("random(seed=" + std::to_string(seed) + ")", std::move(v));
}

Envelope envelope_for(const BoundSpec& spec) {
  const BoundParams& p = spec.params();
  if (spec.exponential_envelope()) return Envelope::exponential(p.A, p.c);
  return Envelope::polynomial(p.C, p.gamma);
}

ArithmeticFunction random_function_for(const BoundSpec& spec, std::uint64_t limit, std::uint64_t seed) {
  RandomOptions opts;
  switch (spec.kind()) {
    case BoundKind::SubmultPoly:
      opts.structure = RandomStructure::Submultiplicative;
      break;
    case BoundKind::MultPoly:
      opts.structure = RandomStructure::Multiplicative;
      break;
    case BoundKind::MultPolyZeroHigherPowers:
      opts.structure = RandomStructure::ZeroHigherPowers;
      break;
    case BoundKind::MultExp:
    case BoundKind::PrimePowerPartition: {
      static constexpr std::uint64_t primes[] = {2, 3, 5, 7};
      opts.structure = RandomStructure::SinglePrime;
      opts.prime = primes[seed % 4];
      break;
    }
    case BoundKind::TruncatedLow:
      opts.structure = RandomStructure::TruncatedLow;
      opts.cutoff = spec.params().N;
      break;
    case BoundKind::TruncatedHigh:
      opts.structure = RandomStructure::TruncatedHigh;
      opts.cutoff = spec.params().N;
      break;
    case BoundKind::OddSupport:
      opts.structure = RandomStructure::OddSupport;
      break;
    default:
      break;
  }
  return random_function(envelope_for(spec), limit, seed, opts);
}

}  // namespace dirinv
