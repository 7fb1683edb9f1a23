#include "dirinv/bounds.hpp"

#include <map>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "dirinv/factorizations.hpp"
#include "dirinv/partitions.hpp"

namespace dirinv {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::SubmultPoly: return "submultpoly";
    case BoundKind::MultPoly: return "multpoly";
    case BoundKind::MultPolyZeroHigherPowers: return "multpolyzero";
    case BoundKind::MultExp: return "multexp";
    case BoundKind::PrimePowerPartition: return "ppartition";
    case BoundKind::GeneralPoly: return "generalpoly";
    case BoundKind::GeneralPolyLog: return "generalpolylog";
    case BoundKind::ExpSmallC: return "expsmallc";
    case BoundKind::ExpSmallCUnitA: return "expsmallcunita";
    case BoundKind::ExpLargeC: return "explargec";
    case BoundKind::TruncatedLow: return "trunclow";
    case BoundKind::TruncatedHigh: return "trunchigh";
    case BoundKind::OddSupport: return "oddsupport";
  }
  return "?";
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw RegimeError(message);
}

GrowthExponent kalmar_exponent() {
  static const GrowthExponent rho = solve(ZetaEquation::full_zeta_equals(Rational(2)));
  return rho;
}

std::optional<GrowthExponent> resolve_exponent(BoundKind kind, const BoundParams& p) {
  switch (kind) {
    case BoundKind::SubmultPoly:
    case BoundKind::ExpSmallCUnitA:
      return kalmar_exponent();
    case BoundKind::GeneralPoly:
    case BoundKind::GeneralPolyLog:
      return solve(ZetaEquation::full_zeta_equals(1 / p.C + 1));
    case BoundKind::ExpSmallC:
      return solve(ZetaEquation::full_zeta_equals(1 / p.A + 1));
    case BoundKind::ExpLargeC:
      return solve(ZetaEquation::full_zeta_equals(1 / (p.A * p.c * p.c) + 1));
    case BoundKind::TruncatedLow:
      return solve(ZetaEquation::truncated_low(p.N, p.C));
    case BoundKind::TruncatedHigh:
      return solve(ZetaEquation::finite_set(p.N, p.C));
    case BoundKind::OddSupport:
      return solve(ZetaEquation::odd_zeta_equals(1 / p.C + 1));
    default:
      return std::nullopt;
  }
}

}  // namespace

BoundSpec::BoundSpec(BoundKind kind, BoundParams params) : kind_(kind), params_(std::move(params)) {
  const auto& p = params_;
  require(sgn(p.C) > 0, "C must be positive");
  require(sgn(p.A) > 0, "A must be positive");
  require(sgn(p.c) > 0, "c must be positive");
  switch (kind_) {
    case BoundKind::MultExp:
    case BoundKind::ExpSmallC:
      require(p.c < 1, to_string(kind_) + " needs c in (0, 1)");
      break;
    case BoundKind::ExpSmallCUnitA:
      require(p.c < 1, "expsmallcunita needs c in (0, 1)");
      require(p.A <= 1, "expsmallcunita needs A <= 1");
      break;
    case BoundKind::ExpLargeC:
      require(p.c > 1, "explargec needs c > 1");
      break;
    case BoundKind::TruncatedLow:
    case BoundKind::TruncatedHigh:
      require(p.N >= 2, to_string(kind_) + " needs N >= 2");
      break;
    default:
      break;
  }
  exponent_ = resolve_exponent(kind_, params_);
}

BoundSpec BoundSpec::submult_poly(const Rational& C, const Rational& gamma) {
  return BoundSpec(BoundKind::SubmultPoly, {.C = C, .gamma = gamma});
}
BoundSpec BoundSpec::mult_poly(const Rational& C, const Rational& gamma) {
  return BoundSpec(BoundKind::MultPoly, {.C = C, .gamma = gamma});
}
BoundSpec BoundSpec::mult_poly_zero_higher_powers(const Rational& C, const Rational& gamma) {
  return BoundSpec(BoundKind::MultPolyZeroHigherPowers, {.C = C, .gamma = gamma});
}
BoundSpec BoundSpec::mult_exp(const Rational& A, const Rational& c) {
  return BoundSpec(BoundKind::MultExp, {.A = A, .c = c});
}
BoundSpec BoundSpec::prime_power_partition(const Rational& A, const Rational& c) {
  return BoundSpec(BoundKind::PrimePowerPartition, {.A = A, .c = c});
}
BoundSpec BoundSpec::general_poly(const Rational& C, const Rational& gamma) {
  return BoundSpec(BoundKind::GeneralPoly, {.C = C, .gamma = gamma});
}
BoundSpec BoundSpec::general_poly_log(const Rational& C, const Rational& gamma) {
  return BoundSpec(BoundKind::GeneralPolyLog, {.C = C, .gamma = gamma});
}
BoundSpec BoundSpec::exp_small_c(const Rational& A, const Rational& c) {
  return BoundSpec(BoundKind::ExpSmallC, {.A = A, .c = c});
}
BoundSpec BoundSpec::exp_small_c_unit_a(const Rational& c, const Rational& A) {
  return BoundSpec(BoundKind::ExpSmallCUnitA, {.A = A, .c = c});
}
BoundSpec BoundSpec::exp_large_c(const Rational& A, const Rational& c) {
  return BoundSpec(BoundKind::ExpLargeC, {.A = A, .c = c});
}
BoundSpec BoundSpec::truncated_low(std::uint64_t N, const Rational& C, const Rational& gamma) {
  return BoundSpec(BoundKind::TruncatedLow, {.C = C, .gamma = gamma, .N = N});
}
BoundSpec BoundSpec::truncated_high(std::uint64_t N, const Rational& C, const Rational& gamma) {
  return BoundSpec(BoundKind::TruncatedHigh, {.C = C, .gamma = gamma, .N = N});
}
BoundSpec BoundSpec::odd_support(const Rational& C, const Rational& gamma) {
  return BoundSpec(BoundKind::OddSupport, {.C = C, .gamma = gamma});
}

BoundSpec BoundSpec::parse(const std::string& text) {
  static const std::map<std::string, BoundKind> kinds = {
      {"submultpoly", BoundKind::SubmultPoly},
      {"multpoly", BoundKind::MultPoly},
      {"multpolyzero", BoundKind::MultPolyZeroHigherPowers},
      {"multexp", BoundKind::MultExp},
      {"ppartition", BoundKind::PrimePowerPartition},
      {"generalpoly", BoundKind::GeneralPoly},
      {"generalpolylog", BoundKind::GeneralPolyLog},
      {"expsmallc", BoundKind::ExpSmallC},
      {"expsmallcunita", BoundKind::ExpSmallCUnitA},
      {"explargec", BoundKind::ExpLargeC},
      {"trunclow", BoundKind::TruncatedLow},
      {"trunchigh", BoundKind::TruncatedHigh},
      {"oddsupport", BoundKind::OddSupport},
  };
  const auto colon = text.find(':');
  const auto it = kinds.find(text.substr(0, colon));
  if (it == kinds.end()) throw std::invalid_argument("unknown bound kind in '" + text + "'");
  BoundParams params;
  if (colon != std::string::npos) {
    std::stringstream in(text.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      const Rational value = parse_rational(item.substr(eq + 1));
      if (key == "C") {
        params.C = value;
      } else if (key == "g") {
        params.gamma = value;
      } else if (key == "A") {
        params.A = value;
      } else if (key == "c") {
        params.c = value;
      } else if (key == "N") {
        if (!is_integer(value) || sgn(value) <= 0) throw std::invalid_argument("N must be a positive integer");
        params.N = value.get_num().get_ui();
      } else {
        throw std::invalid_argument("unknown bound parameter '" + key + "'");
      }
    }
  }
  return BoundSpec(it->second, params);
}

bool BoundSpec::exponential_envelope() const {
  switch (kind_) {
    case BoundKind::MultExp:
    case BoundKind::PrimePowerPartition:
    case BoundKind::ExpSmallC:
    case BoundKind::ExpSmallCUnitA:
    case BoundKind::ExpLargeC:
      return true;
    default:
      return false;
  }
}

std::string BoundSpec::label() const {
  std::ostringstream out;
  out << to_string(kind_) << ':';
  if (exponential_envelope()) {
    out << "A=" << to_string(params_.A) << ",c=" << to_string(params_.c);
  } else {
    if (params_.N != 0) out << "N=" << params_.N << ',';
    out << "C=" << to_string(params_.C) << ",g=" << to_string(params_.gamma);
  }
  return out.str();
}

Rational prime_power_partition_bound(const Rational& A, const Rational& c, std::uint64_t p, unsigned k) {
  Rational sum = 0;
  for_each_partition(k, [&](const Partition& part) {
    mpz_class exponent = 0;
    for (unsigned phi : part.parts) {
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), p, phi);
      exponent += power;
    }
    if (!exponent.fits_slong_p()) throw std::overflow_error("prime power partition exponent too large");
    sum += Rational(multinomial(part.multiplicities)) * pow(A, static_cast<long>(part.parts.size())) *
           pow(c, exponent.get_si());
  });
  return sum;
}

Rational supermultiplicative_bound(std::uint64_t ordered_factorizations, const Rational& f_n) {
  return rational_from_u64(ordered_factorizations) * abs(f_n);
}

Rational submultiplicative_bound(std::uint64_t ordered_factorizations, const PrimeFactorization& factors,
                                 const std::vector<Rational>& f_at_primes) {
  if (factors.size() != f_at_primes.size()) throw std::invalid_argument("one f(p) value per prime factor expected");
  Rational out = rational_from_u64(ordered_factorizations);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out *= pow(Rational(abs(f_at_primes[i])), static_cast<long>(factors[i].exponent));
  }
  return out;
}

namespace {

const Real& euler_e() {
  static const Real e = boost::math::constants::e<Real>();
  return e;
}

Real real_u64(std::uint64_t n) { return to_real(rational_from_u64(n)); }

BoundValue from_real(const Real& x, std::string form) { return {round_up(x), std::nullopt, std::move(form)}; }

BoundValue from_exact(const Rational& q, std::string form) { return {round_up(to_real(q)), q, std::move(form)}; }

// n^gamma exactly when gamma is an integer.
std::optional<Rational> exact_power(std::uint64_t n, const Rational& gamma) {
  if (!is_integer(gamma) || !gamma.get_num().fits_slong_p()) return std::nullopt;
  return pow(rational_from_u64(n), gamma.get_num().get_si());
}

}  // namespace

std::vector<BoundValue> bound_chain(const BoundSpec& spec, std::uint64_t n, const PrimeFactorization& factors,
                                    std::uint64_t ordered_factorizations) {
  if (n < 2) throw std::invalid_argument("bounds are stated for n >= 2");
  const BoundParams& p = spec.params();
  const long big_omega_n = static_cast<long>(big_omega(factors));
  const long small_omega_n = static_cast<long>(small_omega(factors));
  const Real rn = real_u64(n);
  const Real ln_n = log(rn);
  const Real ln2 = log(Real(2));
  const Real gamma = to_real(p.gamma);
  // Every bound increases with its exponent for n >= 2, so take the upper end.
  const Real expo = spec.exponent() ? Real(spec.exponent()->hi) : Real(0);

  std::vector<BoundValue> chain;
  switch (spec.kind()) {
    case BoundKind::SubmultPoly: {
      const Rational c_pow = pow(p.C, big_omega_n);
      const Rational h = rational_from_u64(ordered_factorizations);
      if (auto np = exact_power(n, p.gamma)) {
        chain.push_back(from_exact(h * c_pow * *np, "H(n) C^Omega n^g"));
      } else {
        chain.push_back(from_real(to_real(h * c_pow) * pow(rn, gamma), "H(n) C^Omega n^g"));
      }
      chain.push_back(from_real(to_real(c_pow) * pow(rn, gamma + expo), "C^Omega n^(g+rho)"));
      break;
    }
    case BoundKind::MultPoly: {
      const Rational head = pow(p.C / (p.C + 1), small_omega_n) * pow(p.C + 1, big_omega_n);
      if (auto np = exact_power(n, p.gamma)) {
        chain.push_back(from_exact(head * *np, "(C/(C+1))^omega (C+1)^Omega n^g"));
      } else {
        chain.push_back(from_real(to_real(head) * pow(rn, gamma), "(C/(C+1))^omega (C+1)^Omega n^g"));
      }
      chain.push_back(from_real(pow(rn, gamma + log(to_real(p.C + 1)) / ln2), "n^(g+ln(1+C)/ln 2)"));
      break;
    }
    case BoundKind::MultPolyZeroHigherPowers: {
      const Rational head = pow(p.C, big_omega_n);
      if (auto np = exact_power(n, p.gamma)) {
        chain.push_back(from_exact(head * *np, "C^Omega n^g"));
      } else {
        chain.push_back(from_real(to_real(head) * pow(rn, gamma), "C^Omega n^g"));
      }
      break;
    }
    case BoundKind::MultExp: {
      const Rational head = pow(p.A / (p.A + 1), small_omega_n) * pow(p.A + 1, big_omega_n);
      const Real decay = 3 * log(to_real(p.c)) / log(Real(3));
      chain.push_back(from_real(to_real(head) * pow(rn, decay), "(A/(A+1))^omega (A+1)^Omega n^(3 ln c/ln 3)"));
      chain.push_back(from_real(pow(rn, decay + log(to_real(p.A + 1)) / ln2), "n^(3 ln c/ln 3 + ln(1+A)/ln 2)"));
      break;
    }
    case BoundKind::PrimePowerPartition: {
      Rational product = 1;
      for (const auto& [prime, e] : factors) product *= prime_power_partition_bound(p.A, p.c, prime, e);
      chain.push_back(from_exact(product, "prod over p^k of partition sums"));
      break;
    }
    case BoundKind::GeneralPoly:
    case BoundKind::TruncatedHigh:
    case BoundKind::OddSupport:
      chain.push_back(from_real(pow(rn, gamma + expo), "n^(g+varsigma)"));
      break;
    case BoundKind::TruncatedLow:
      if (n <= p.N) {
        chain.push_back(from_exact(Rational(0), "0 on [2, N]"));
      } else {
        chain.push_back(from_real(pow(rn, gamma + expo), "n^(g+varsigma)"));
      }
      break;
    case BoundKind::GeneralPolyLog: {
      const Real core = to_real(p.C) * pow(rn, gamma + expo) / pow(Real(2), expo);
      chain.push_back(from_real(Real(big_omega_n) * core, "Omega C n^(g+varsigma) / 2^varsigma"));
      chain.push_back(from_real(core * ln_n / ln2, "C n^(g+varsigma) ln n / (2^varsigma ln 2)"));
      break;
    }
    case BoundKind::ExpSmallC: {
      const Real core = to_real(p.A) * pow(rn, expo + euler_e() * log(to_real(p.c))) / pow(Real(2), expo);
      chain.push_back(from_real(Real(big_omega_n) * core, "Omega A n^(varsigma + e ln c) / 2^varsigma"));
      chain.push_back(from_real(core * ln_n / ln2, "A n^(varsigma + e ln c) ln n / (2^varsigma ln 2)"));
      break;
    }
    case BoundKind::ExpSmallCUnitA:
      chain.push_back(from_real(pow(rn, expo + euler_e() * log(to_real(p.c))), "n^(rho + e ln c)"));
      break;
    case BoundKind::ExpLargeC: {
      const Real rc = to_real(p.c);
      const Real lead = to_real(p.A) * pow(rc, rn);
      const Real rest = Real(big_omega_n - 1) * to_real(p.A) * pow(rn, expo) / pow(Real(2), expo) * pow(rc, rn / 2);
      chain.push_back(from_real(lead + rest, "A c^n + (Omega-1) A n^upsilon c^(n/2) / 2^upsilon"));
      break;
    }
  }
  return chain;
}

std::vector<BoundValue> bound_chain(const BoundSpec& spec, std::uint64_t n) {
  const std::uint64_t h =
      spec.kind() == BoundKind::SubmultPoly ? count_ordered_factorizations(n, FactorSet::all_from_2()) : 0;
  return bound_chain(spec, n, factorize(n), h);
}

BoundValue bound_value(const BoundSpec& spec, std::uint64_t n) { return bound_chain(spec, n).front(); }

bool admits(const BoundValue& bound, const Rational& abs_value) {
  if (bound.exact) return abs_value <= *bound.exact;
  return compare(bound.upper, abs_value) >= 0;
}

double bound_ratio(const BoundValue& bound, const Rational& abs_value) {
  if (bound.exact) {
    if (sgn(*bound.exact) == 0) return sgn(abs_value) == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return Rational(abs_value / *bound.exact).get_d();
  }
  if (bound.upper == 0) return sgn(abs_value) == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(to_real(abs_value) / bound.upper);
}

}  // namespace dirinv
