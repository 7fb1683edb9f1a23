#include "dirinv/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "dirinv/factor_set.hpp"
#include "dirinv/factorizations.hpp"
#include "dirinv/inverse.hpp"
#include "dirinv/multiplicativity.hpp"
#include "dirinv/random_functions.hpp"

namespace dirinv {
namespace {

[[noreturn]] void violation(const std::string& what, std::uint64_t n) {
  throw HypothesisViolation(what + " fails at n = " + std::to_string(n), n);
}

void require_pair(const PropertyCheck& check, const std::string& what) {
  if (check.holds) return;
  const auto [m, n] = *check.counterexample;
  throw HypothesisViolation(what + " fails at (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")", m * n);
}

bool is_prime_power(std::uint64_t n) { return factorize(n).size() == 1; }

}  // namespace

void check_hypothesis(const BoundSpec& spec, const ArithmeticFunction& f, std::uint64_t limit) {
  const Envelope env = envelope_for(spec);
  const BoundParams& p = spec.params();
  const std::string bound = "|f(n)| <= " + std::string(spec.exponential_envelope() ? "A c^n" : "C n^g");

  for (std::uint64_t n = 2; n <= limit; ++n) {
    const Rational v = f(n);
    switch (spec.kind()) {
      case BoundKind::TruncatedLow:
        if (n <= p.N) {
          if (sgn(v) != 0) violation("f = 0 on [2, N]", n);
          continue;
        }
        break;
      case BoundKind::TruncatedHigh:
        if (n > p.N) {
          if (sgn(v) != 0) violation("f = 0 above N", n);
          continue;
        }
        break;
      case BoundKind::OddSupport:
        if (n % 2 == 0) {
          if (sgn(v) != 0) violation("f = 0 on even n", n);
          continue;
        }
        break;
      case BoundKind::PrimePowerPartition:
        if (!is_prime_power(n)) continue;
        break;
      case BoundKind::MultPolyZeroHigherPowers: {
        const auto fac = factorize(n);
        if (fac.size() == 1 && fac.front().exponent >= 2 && sgn(v) != 0) violation("f(p^k) = 0 for k >= 2", n);
        break;
      }
      default:
        break;
    }
    if (!env.admits(v, n)) violation(bound, n);
  }

  switch (spec.kind()) {
    case BoundKind::SubmultPoly:
      require_pair(check_multiplicativity(f, limit).submultiplicative_abs, "|f| submultiplicative");
      break;
    case BoundKind::MultPoly:
    case BoundKind::MultPolyZeroHigherPowers:
    case BoundKind::MultExp:
    case BoundKind::PrimePowerPartition:
      require_pair(check_multiplicativity(f, limit).multiplicative, "f multiplicative");
      break;
    default:
      break;
  }
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("DIRINV_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

unsigned worker_count(unsigned requested, std::size_t items) {
  const unsigned t = requested ? requested : default_thread_count();
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(t, items)));
}

// Runs body(i) for i in [0, count) on `threads` workers with a strided split.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, const Body& body) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) body(i);
    });
}

}  // namespace

BoundTable::BoundTable(const BoundSpec& spec, std::vector<std::uint64_t> points, unsigned threads)
    : spec_(spec), points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("bound table needs at least one point");
  if (points_.front() < 2) throw std::invalid_argument("bounds are stated for n >= 2");
  if (!std::is_sorted(points_.begin(), points_.end())) throw std::invalid_argument("points must be ascending");
  const std::uint64_t hi = points_.back();
  if (hi >= (1ULL << 32)) throw std::invalid_argument("sweep range too large");
  std::vector<std::uint64_t> h;
  if (spec.kind() == BoundKind::SubmultPoly) h = ordered_factorization_table(hi, FactorSet::all_from_2());
  const SmallestPrimeFactorSieve sieve(static_cast<std::uint32_t>(hi));
  chains_.resize(points_.size());
  parallel_for(points_.size(), worker_count(threads, points_.size()), [&](std::size_t i) {
    const std::uint64_t n = points_[i];
    chains_[i] = bound_chain(spec_, n, sieve.factorize(static_cast<std::uint32_t>(n)), h.empty() ? 0 : h[n]);
  });
}

BoundTable BoundTable::range(const BoundSpec& spec, std::uint64_t lo, std::uint64_t hi, unsigned threads) {
  if (lo < 2 || hi < lo) throw std::invalid_argument("sweep range must satisfy 2 <= lo <= hi");
  if (hi >= (1ULL << 32)) throw std::invalid_argument("sweep range too large");
  std::vector<std::uint64_t> points(hi - lo + 1);
  std::iota(points.begin(), points.end(), lo);
  return BoundTable(spec, std::move(points), threads);
}

SweepResult verify_sweep(const BoundTable& bounds, const ArithmeticFunction& f, const SweepOptions& options) {
  const BoundSpec& spec = bounds.spec();
  const auto& ns = bounds.points();
  const std::uint64_t hi = ns.back();
  if (options.check_hypothesis) check_hypothesis(spec, f, hi);
  const InverseTable inv = inverse_recursive(f, hi);

  SweepResult result;
  result.spec = spec.label();
  result.function = f.name();
  result.reports.resize(ns.size());
  parallel_for(ns.size(), worker_count(options.threads, ns.size()), [&](std::size_t i) {
    const auto& chain = bounds.chain(i);
    BoundReport& r = result.reports[i];
    r.n = ns[i];
    r.inverse_abs = abs(inv[r.n]);
    r.bound = chain.front();
    r.ratio = bound_ratio(r.bound, r.inverse_abs);
    r.pass = std::all_of(chain.begin(), chain.end(), [&](const BoundValue& b) { return admits(b, r.inverse_abs); });
  });

  SweepSummary& s = result.summary;
  for (const auto& r : result.reports) {
    ++s.checked;
    if (!r.pass) {
      ++s.failures;
      if (!s.first_failure) s.first_failure = r.n;
    }
    if (r.ratio > s.max_ratio || s.argmax == 0) {
      s.max_ratio = r.ratio;
      s.argmax = r.n;
    }
  }
  if (spec.kind() == BoundKind::ExpLargeC) {
    const Real c = to_real(spec.params().c);
    Real best = 0;
    for (const auto& r : result.reports) {
      const Real a = to_real(r.inverse_abs) / pow(c, Real(r.n));
      if (a > best) best = a;
    }
    s.fitted_constant = round_up(best);
  }
  return result;
}

SweepResult verify_sweep(const BoundSpec& spec, const ArithmeticFunction& f, std::uint64_t lo, std::uint64_t hi,
                         const SweepOptions& options) {
  if (lo < 2 || hi < lo) throw std::invalid_argument("sweep range must satisfy 2 <= lo <= hi");
  if (hi >= (1ULL << 32)) throw std::invalid_argument("sweep range too large");
  if (options.mode == SweepMode::RandomSample && options.sample_size < hi - lo + 1) {
    std::mt19937_64 rng(options.seed);
    // Floyd's algorithm: distinct draws without materializing the range.
    const std::uint64_t span = hi - lo + 1;
    std::set<std::uint64_t> picked;
    for (std::uint64_t j = span - options.sample_size; j < span; ++j) {
      const std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
      if (!picked.insert(t).second) picked.insert(j);
    }
    std::vector<std::uint64_t> ns;
    for (auto t : picked) ns.push_back(lo + t);
    // The hypothesis must hold on all of [2, hi] because f^{-1}(n) depends on every divisor.
    if (options.check_hypothesis) check_hypothesis(spec, f, hi);
    SweepOptions rest = options;
    rest.check_hypothesis = false;
    return verify_sweep(BoundTable(spec, std::move(ns), options.threads), f, rest);
  }
  return verify_sweep(BoundTable::range(spec, lo, hi, options.threads), f, options);
}

}  // namespace dirinv
