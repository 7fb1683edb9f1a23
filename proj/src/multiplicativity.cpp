#include "dirinv/multiplicativity.hpp"

#include <numeric>
#include <stdexcept>

namespace dirinv {

std::string to_string(MultiplicativityClass c) {
  switch (c) {
    case MultiplicativityClass::TotallyMultiplicative:
      return "totally-multiplicative";
    case MultiplicativityClass::Multiplicative:
      return "multiplicative";
    case MultiplicativityClass::SupermultiplicativeAbs:
      return "supermultiplicative-abs";
    case MultiplicativityClass::SubmultiplicativeAbs:
      return "submultiplicative-abs";
  }
  return "?";
}

std::vector<MultiplicativityClass> MultiplicativityReport::holding() const {
  std::vector<MultiplicativityClass> out;
  if (totally_multiplicative.holds) out.push_back(MultiplicativityClass::TotallyMultiplicative);
  if (multiplicative.holds) out.push_back(MultiplicativityClass::Multiplicative);
  if (supermultiplicative_abs.holds) out.push_back(MultiplicativityClass::SupermultiplicativeAbs);
  if (submultiplicative_abs.holds) out.push_back(MultiplicativityClass::SubmultiplicativeAbs);
  return out;
}

namespace {

void record(PropertyCheck& check, bool ok, std::uint64_t m, std::uint64_t n) {
  if (!ok && check.holds) {
    check.holds = false;
    check.counterexample = std::make_pair(m, n);
  }
}

}  // namespace

MultiplicativityReport check_multiplicativity(const ArithmeticFunction& f, std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("multiplicativity scan needs limit >= 2");
  const std::vector<Rational> values = f.tabulate(limit);
  std::vector<Rational> abs_values(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) abs_values[i] = abs(values[i]);

  MultiplicativityReport report;
  report.limit = limit;
  Rational product;
  for (std::uint64_t m = 2; m * m <= limit; ++m) {
    for (std::uint64_t n = m; m * n <= limit; ++n) {
      const std::uint64_t mn = m * n;
      product = values[m] * values[n];
      const bool equal = product == values[mn];
      record(report.totally_multiplicative, equal, m, n);
      if (std::gcd(m, n) == 1) record(report.multiplicative, equal, m, n);
      const int cmp_abs = cmp(abs(product), abs_values[mn]);
      record(report.supermultiplicative_abs, cmp_abs <= 0, m, n);
      record(report.submultiplicative_abs, cmp_abs >= 0, m, n);
    }
  }
  return report;
}

}  // namespace dirinv
