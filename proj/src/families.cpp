#include "dirinv/families.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "dirinv/factorizations.hpp"

namespace dirinv {
namespace {

bool is_power_of_two(std::uint64_t n) { return std::has_single_bit(n); }

long log2_exact(std::uint64_t n) { return std::countr_zero(n); }

long integer_gamma(const Rational& gamma) {
  if (!is_integer(gamma) || !gamma.get_num().fits_slong_p()) {
    throw std::invalid_argument("family exponent g must be an integer, got " + to_string(gamma));
  }
  return gamma.get_num().get_si();
}

std::string describe(FamilyKind kind, const FamilyParams& p) {
  switch (kind) {
    case FamilyKind::TwoOnly: return "twoonly";
    case FamilyKind::Hille: return "hille";
    case FamilyKind::NegativePower: return "negpow:g=" + to_string(p.gamma);
    case FamilyKind::PowerOfTwoPolynomial: return "pow2:C=" + to_string(p.C) + ",g=" + to_string(p.gamma);
    case FamilyKind::TwoOnlyExponential: return "exp2:A=" + to_string(p.A) + ",c=" + to_string(p.c);
    case FamilyKind::PowerOfTwoExponential: return "exppow2:A=" + to_string(p.A) + ",c=" + to_string(p.c);
  }
  return "?";
}

}  // namespace

ExtremalFamily extremal_family(FamilyKind kind, const FamilyParams& params) {
  const std::string label = describe(kind, params);
  const FamilyParams p = params;
  switch (kind) {
    case FamilyKind::TwoOnly:
      return {kind, p,
              ArithmeticFunction(label, [](std::uint64_t n) { return n == 1 ? Rational(1) : n == 2 ? Rational(-1) : Rational(0); }),
              [](std::uint64_t n) { return is_power_of_two(n) ? Rational(1) : Rational(0); }, label};
    case FamilyKind::Hille:
      return {kind, p, ArithmeticFunction(label, [](std::uint64_t n) { return n == 1 ? Rational(1) : Rational(-1); }),
              [](std::uint64_t n) { return rational_from_u64(count_ordered_factorizations(n, FactorSet::all_from_2())); },
              label};
    case FamilyKind::NegativePower: {
      const long g = integer_gamma(p.gamma);
      return {kind, p,
              ArithmeticFunction(label,
                                 [g](std::uint64_t n) { return n == 1 ? Rational(1) : Rational(-pow(rational_from_u64(n), g)); }),
              [g](std::uint64_t n) {
                return Rational(rational_from_u64(count_ordered_factorizations(n, FactorSet::all_from_2())) *
                                pow(rational_from_u64(n), g));
              },
              label};
    }
    case FamilyKind::PowerOfTwoPolynomial: {
      const long g = integer_gamma(p.gamma);
      if (sgn(p.C) <= 0) throw std::invalid_argument("pow2 family needs C > 0");
      return {kind, p,
              ArithmeticFunction(label,
                                 [C = p.C, g](std::uint64_t n) {
                                   if (n == 1) return Rational(1);
                                   if (!is_power_of_two(n)) return Rational(0);
                                   return Rational(-C * pow(Rational(2), log2_exact(n) * g));
                                 }),
              [C = p.C, g](std::uint64_t n) {
                if (n == 1) return Rational(1);
                if (!is_power_of_two(n)) return Rational(0);
                const long k = log2_exact(n);
                return Rational(C * pow(C + 1, k - 1) * pow(Rational(2), k * g));
              },
              label};
    }
    case FamilyKind::TwoOnlyExponential: {
      if (sgn(p.A) <= 0 || sgn(p.c) <= 0) throw std::invalid_argument("exp2 family needs A, c > 0");
      const Rational f2 = -p.A * p.c * p.c;
      return {kind, p,
              ArithmeticFunction(label, [f2](std::uint64_t n) { return n == 1 ? Rational(1) : n == 2 ? f2 : Rational(0); }),
              [base = Rational(-f2)](std::uint64_t n) {
                if (!is_power_of_two(n)) return Rational(0);
                return pow(base, log2_exact(n));
              },
              label};
    }
    case FamilyKind::PowerOfTwoExponential: {
      if (sgn(p.A) <= 0 || sgn(p.c) <= 0) throw std::invalid_argument("exppow2 family needs A, c > 0");
      return {kind, p,
              ArithmeticFunction(label,
                                 [A = p.A, c = p.c](std::uint64_t n) {
                                   if (n == 1) return Rational(1);
                                   if (!is_power_of_two(n)) return Rational(0);
                                   if (n > (1ULL << 40)) throw std::overflow_error("c^(2^k) too large to hold");
                                   return Rational(-A * pow(c, static_cast<long>(n)));
                                 }),
              {}, label};
    }
  }
  throw std::invalid_argument("unknown family");
}

ExtremalFamily parse_family(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  FamilyParams p;
  if (colon != std::string::npos) {
    std::stringstream in(text.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("expected key=value in family '" + text + "'");
      const std::string key = item.substr(0, eq);
      const Rational value = parse_rational(item.substr(eq + 1));
      if (key == "C") {
        p.C = value;
      } else if (key == "g") {
        p.gamma = value;
      } else if (key == "A") {
        p.A = value;
      } else if (key == "c") {
        p.c = value;
      } else {
        throw std::invalid_argument("unknown family parameter '" + key + "'");
      }
    }
  }
  if (head == "twoonly") return extremal_family(FamilyKind::TwoOnly, p);
  if (head == "hille") return extremal_family(FamilyKind::Hille, p);
  if (head == "negpow") return extremal_family(FamilyKind::NegativePower, p);
  if (head == "pow2") return extremal_family(FamilyKind::PowerOfTwoPolynomial, p);
  if (head == "exp2") return extremal_family(FamilyKind::TwoOnlyExponential, p);
  if (head == "exppow2") return extremal_family(FamilyKind::PowerOfTwoExponential, p);
  throw std::invalid_argument("unknown family '" + head + "'");
}

std::vector<FamilyInfo> list_families() {
  return {
      {"twoonly", "", "f(2) = -1, f(n) = 0 for n >= 3; inverse is 1 on powers of two"},
      {"hille", "", "f(n) = -1 for n >= 2; inverse is H(n)"},
      {"negpow", "g=<int>", "f(n) = -n^g for n >= 2; inverse is H(n) n^g"},
      {"pow2", "C=<q>,g=<int>", "f(2^k) = -C 2^(kg), zero elsewhere; inverse C (C+1)^(k-1) 2^(kg)"},
      {"exp2", "A=<q>,c=<q>", "f(2) = -A c^2, zero elsewhere; inverse (A c^2)^k on 2^k"},
      {"exppow2", "A=<q>,c=<q>", "f(2^k) = -A c^(2^k), zero elsewhere; inverse A c^(2^k) + lower order terms"},
  };
}

}  // namespace dirinv
