#include "dirinv/factorizations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dirinv/errors.hpp"
#include "dirinv/number_theory.hpp"

namespace dirinv {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw CountOverflowError("ordered factorization count exceeds 2^64 - 1");
  }
  return out;
}

// Divisors of n that lie in P, plus the full divisor list for index lookups.
struct DivisorLattice {
  std::vector<std::uint64_t> all;

  explicit DivisorLattice(std::uint64_t n) : all(divisors(n)) {}

  std::size_t index_of(std::uint64_t d) const {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), d) - all.begin());
  }
};

class Enumerator {
 public:
  Enumerator(std::optional<unsigned> k,
             const std::function<void(std::span<const std::uint64_t>)>& visit, std::uint64_t ceiling,
             std::vector<std::uint64_t> candidates)
      : k_(k), visit_(visit), ceiling_(ceiling), candidates_(std::move(candidates)) {}

  void run(std::uint64_t remaining) {
    if (remaining == 1) {
      if (!prefix_.empty() && (!k_ || prefix_.size() == *k_)) emit();
      return;
    }
    if (k_ && prefix_.size() >= *k_) return;
    for (std::uint64_t d : candidates_) {
      if (d > remaining) break;
      if (remaining % d != 0) continue;
      prefix_.push_back(d);
      run(remaining / d);
      prefix_.pop_back();
    }
  }

  std::uint64_t visited() const { return visited_; }

 private:
  void emit() {
    if (++visited_ > ceiling_) {
      throw ResourceLimitError("ordered factorization enumeration exceeded " + std::to_string(ceiling_) +
                               " tuples");
    }
    visit_(prefix_);
  }

  std::optional<unsigned> k_;
  const std::function<void(std::span<const std::uint64_t>)>& visit_;
  std::uint64_t ceiling_;
  std::vector<std::uint64_t> candidates_;
  std::vector<std::uint64_t> prefix_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_ordered_factorization(std::uint64_t n, const FactorSet& factors,
                                             std::optional<unsigned> k,
                                             const std::function<void(std::span<const std::uint64_t>)>& visit,
                                             std::uint64_t ceiling) {
  if (n < 2) throw std::invalid_argument("enumeration requires n >= 2");
  if (k && *k == 0) throw std::invalid_argument("factor count k must be >= 1");
  factors.require_defined_up_to(n);
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t d : divisors(n)) {
    if (factors.contains(d)) candidates.push_back(d);
  }
  Enumerator e(k, visit, ceiling, std::move(candidates));
  e.run(n);
  return e.visited();
}

std::vector<OrderedFactorization> enumerate_ordered_factorizations(std::uint64_t n, const FactorSet& factors,
                                                                   std::optional<unsigned> k,
                                                                   std::uint64_t ceiling) {
  std::vector<OrderedFactorization> out;
  for_each_ordered_factorization(
      n, factors, k, [&](std::span<const std::uint64_t> t) { out.emplace_back(t.begin(), t.end()); }, ceiling);
  return out;
}

std::uint64_t count_ordered_factorizations(std::uint64_t n, const FactorSet& factors) {
  if (n == 0) throw std::invalid_argument("H(n, P) requires n >= 1");
  factors.require_defined_up_to(n);
  const DivisorLattice lattice(n);
  const auto& ds = lattice.all;
  // h[i] = H(ds[i], P), filled in ascending divisor order.
  std::vector<std::uint64_t> h(ds.size(), 0);
  h[0] = 1;
  for (std::size_t i = 1; i < ds.size(); ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      const std::uint64_t d = ds[j];
      if (ds[i] % d != 0 || !factors.contains(d)) continue;
      h[i] = checked_add(h[i], h[lattice.index_of(ds[i] / d)]);
    }
  }
  return h.back();
}

std::uint64_t count_ordered_factorizations_k(std::uint64_t n, unsigned k, const FactorSet& factors) {
  if (n < 2) throw std::invalid_argument("H_k(n, P) requires n >= 2");
  if (k == 0) throw std::invalid_argument("H_k(n, P) requires k >= 1");
  factors.require_defined_up_to(n);
  if (k > big_omega(n)) return 0;
  const DivisorLattice lattice(n);
  const auto& ds = lattice.all;
  // layer[i] = H_j(ds[i], P) for the current j, starting from H_0 = epsilon.
  std::vector<std::uint64_t> layer(ds.size(), 0);
  layer[0] = 1;
  for (unsigned j = 1; j <= k; ++j) {
    std::vector<std::uint64_t> next(ds.size(), 0);
    for (std::size_t i = 1; i < ds.size(); ++i) {
      for (std::size_t t = 1; t <= i; ++t) {
        const std::uint64_t d = ds[t];
        if (ds[i] % d != 0 || !factors.contains(d)) continue;
        next[i] = checked_add(next[i], layer[lattice.index_of(ds[i] / d)]);
      }
    }
    layer = std::move(next);
  }
  return layer.back();
}

std::vector<std::uint64_t> ordered_factorization_table(std::uint64_t limit, const FactorSet& factors) {
  factors.require_defined_up_to(limit);
  std::vector<std::uint64_t> h(limit + 1, 0);
  if (limit >= 1) h[1] = 1;
  // Push H(m) into every multiple m*d with d in P; H(m) is final once m is reached.
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (h[m] == 0) continue;
    for (std::uint64_t d = 2; d <= limit / m; ++d) {
      if (factors.contains(d)) h[m * d] = checked_add(h[m * d], h[m]);
    }
  }
  return h;
}

std::vector<std::vector<std::uint64_t>> ordered_factorization_layers(std::uint64_t limit, unsigned max_k,
                                                                     const FactorSet& factors) {
  factors.require_defined_up_to(limit);
  std::vector<std::vector<std::uint64_t>> layers(max_k + 1, std::vector<std::uint64_t>(limit + 1, 0));
  if (limit >= 1) layers[0][1] = 1;
  std::vector<std::uint64_t> members;
  for (std::uint64_t d = 2; d <= limit; ++d) {
    if (factors.contains(d)) members.push_back(d);
  }
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto& prev = layers[k - 1];
    auto& cur = layers[k];
    for (std::uint64_t m = 1; m <= limit; ++m) {
      if (prev[m] == 0) continue;
      for (std::uint64_t d : members) {
        if (d > limit / m) break;
        cur[m * d] = checked_add(cur[m * d], prev[m]);
      }
    }
  }
  return layers;
}

}  // namespace dirinv
