#include "dirinv/partitions.hpp"

#include <stdexcept>
#include <string>

#include "dirinv/errors.hpp"

namespace dirinv {
namespace {

void fill_multiplicities(Partition& p) {
  p.multiplicities.clear();
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i > 0 && p.parts[i] == p.parts[i - 1]) {
      ++p.multiplicities.back();
    } else {
      p.multiplicities.push_back(1);
    }
  }
}

void generate(unsigned remaining, unsigned max_part, Partition& current,
              const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    fill_multiplicities(current);
    visit(current);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    current.parts.push_back(part);
    generate(remaining - part, part, current, visit);
    current.parts.pop_back();
  }
}

}  // namespace

void for_each_partition(unsigned m, const std::function<void(const Partition&)>& visit) {
  if (m == 0) throw std::invalid_argument("partitions are defined for m >= 1");
  Partition current;
  generate(m, m, current, visit);
}

std::vector<Partition> partitions(unsigned m) {
  if (m > kMaxPartitionedInteger) {
    throw ResourceLimitError("partitions of " + std::to_string(m) + " exceed the ceiling " +
                             std::to_string(kMaxPartitionedInteger));
  }
  std::vector<Partition> out;
  for_each_partition(m, [&](const Partition& p) { out.push_back(p); });
  return out;
}

mpz_class multinomial(const std::vector<unsigned>& multiplicities) {
  unsigned total = 0;
  for (unsigned l : multiplicities) total += l;
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), total);
  for (unsigned l : multiplicities) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), l);
    out /= f;
  }
  return out;
}

Rational partition_multinomial_sum(const Rational& a, unsigned k) {
  if (k == 0) throw std::invalid_argument("partition_multinomial_sum requires k >= 1");
  Rational sum = 0;
  for_each_partition(k, [&](const Partition& p) {
    sum += Rational(multinomial(p.multiplicities)) * pow(a, static_cast<long>(p.parts.size()));
  });
  return sum;
}

}  // namespace dirinv
