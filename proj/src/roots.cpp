#include "dirinv/roots.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "dirinv/zeta.hpp"

namespace dirinv {

ZetaEquation ZetaEquation::full_zeta_equals(const Rational& target) {
  if (sgn(target) <= 0) throw std::invalid_argument("equation target must be positive");
  ZetaEquation e;
  e.kind_ = Kind::FullZetaEquals;
  e.target_ = target.get_d();
  e.description_ = "zeta(s) = " + to_string(target);
  return e;
}

ZetaEquation ZetaEquation::odd_zeta_equals(const Rational& target) {
  if (sgn(target) <= 0) throw std::invalid_argument("equation target must be positive");
  ZetaEquation e;
  e.kind_ = Kind::OddZetaEquals;
  e.target_ = target.get_d();
  e.description_ = "(1 - 2^-s) zeta(s) = " + to_string(target);
  return e;
}

ZetaEquation ZetaEquation::truncated_low(std::uint64_t n, const Rational& c) {
  if (n < 2 || sgn(c) <= 0) throw std::invalid_argument("truncated equation needs N >= 2 and C > 0");
  ZetaEquation e;
  e.kind_ = Kind::TruncatedLow;
  e.n_ = n;
  e.target_ = Rational(1 / c).get_d();
  e.description_ = "sum_{m>" + std::to_string(n) + "} m^-s = 1/" + to_string(c);
  return e;
}

ZetaEquation ZetaEquation::finite_set(std::uint64_t n, const Rational& c) {
  if (n < 2 || sgn(c) <= 0) throw std::invalid_argument("finite equation needs N >= 2 and C > 0");
  ZetaEquation e;
  e.kind_ = Kind::FiniteSet;
  e.n_ = n;
  e.target_ = Rational(1 / c).get_d();
  e.description_ = "sum_{m=2}^{" + std::to_string(n) + "} m^-s = 1/" + to_string(c);
  return e;
}

ZetaEquation ZetaEquation::factor_set(FactorSet factors, const Rational& target) {
  if (sgn(target) <= 0) throw std::invalid_argument("equation target must be positive");
  ZetaEquation e;
  e.kind_ = Kind::GenericFactorSet;
  e.target_ = target.get_d();
  e.description_ = "zeta_{" + factors.label() + "}(s) = " + to_string(target);
  e.factors_ = std::move(factors);
  return e;
}

double ZetaEquation::residual(double s, double eval_tolerance) const {
  switch (kind_) {
    case Kind::FullZetaEquals:
      return zeta_real(s, eval_tolerance) - target_;
    case Kind::OddZetaEquals:
      return (1 - std::exp2(-s)) * zeta_real(s, eval_tolerance) - target_;
    case Kind::TruncatedLow:
      return zeta_tail(s, n_ + 1, eval_tolerance) - target_;
    case Kind::FiniteSet: {
      long double sum = 0;
      for (std::uint64_t m = n_; m >= 2; --m) sum += std::pow(static_cast<long double>(m), -static_cast<long double>(s));
      return static_cast<double>(sum - target_);
    }
    case Kind::GenericFactorSet:
      return zeta_factor_set(*factors_, s, eval_tolerance) - target_;
  }
  return 0;
}

double ZetaEquation::abscissa() const {
  switch (kind_) {
    case Kind::FiniteSet:
      return -std::numeric_limits<double>::infinity();
    case Kind::GenericFactorSet:
      return convergence_abscissa(*factors_);
    default:
      return 1.0;
  }
}

GrowthExponent solve(const ZetaEquation& equation, const SolveOptions& options) {
  const double eps = options.eval_tolerance;
  auto positive = [&](double s) { return equation.residual(s, eps) > eps; };
  auto negative = [&](double s) { return equation.residual(s, eps) < -eps; };
  const bool unbounded_below = std::isinf(equation.abscissa());

  double lo = 1.0 + 1e-3;
  if (!positive(lo)) {
    if (unbounded_below) {
      double step = 1.0;
      do {
        lo -= step;
        step *= 2;
        if (lo < -1e6) throw RootNotBracketed("no sign change below s = -1e6 for " + equation.description());
      } while (!positive(lo));
    } else {
      do {
        lo = 1.0 + (lo - 1.0) / 8;
        if (lo - 1.0 < 1e-6) {
          throw RootNotBracketed("residual never positive near the pole for " + equation.description());
        }
      } while (!positive(lo));
    }
  }
  double hi = 64.0;
  while (!negative(hi)) {
    hi *= 2;
    if (hi > 1e6) {
      throw RootNotBracketed("residual never negative up to s = 1e6 for " + equation.description() +
                             " (target must exceed the series limit)");
    }
  }

  while (hi - lo > options.tolerance) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double r = equation.residual(mid, eps);
    if (r > eps) {
      lo = mid;
    } else if (r < -eps) {
      hi = mid;
    } else {
      // Sign undecidable at mid; certify a tolerance-wide window around it.
      const double a = std::max(lo, mid - options.tolerance / 2);
      const double b = std::min(hi, mid + options.tolerance / 2);
      if (!positive(a) || !negative(b)) {
        throw ToleranceUnachievable("cannot certify a root of " + equation.description() + " to width " +
                                    std::to_string(options.tolerance));
      }
      lo = a;
      hi = b;
      break;
    }
  }
  if (hi - lo > options.tolerance) {
    throw ToleranceUnachievable("enclosure width stalled above tolerance for " + equation.description());
  }

  GrowthExponent out;
  out.lo = lo;
  out.hi = hi;
  out.value = lo + (hi - lo) / 2;
  out.equation = equation.description();
  if (unbounded_below && lo <= 0 && 0 <= hi) {
    out.boundary = true;
    out.value = 0;
  }
  return out;
}

GrowthExponent growth_exponent(const FactorSet& factors, const SolveOptions& options) {
  return solve(ZetaEquation::factor_set(factors, Rational(1)), options);
}

namespace {

std::vector<std::string> split_args(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::uint64_t parse_count(const std::string& text) {
  const Rational q = parse_rational(text);
  if (!is_integer(q) || sgn(q) <= 0) throw std::invalid_argument("expected a positive integer, got '" + text + "'");
  return q.get_num().get_ui();
}

Rational parse_positive(const std::string& text) {
  const Rational q = parse_rational(text);
  if (sgn(q) <= 0) throw std::invalid_argument("expected a positive constant, got '" + text + "'");
  return q;
}

}  // namespace

ZetaEquation parse_equation(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::vector<std::string> args =
      colon == std::string::npos ? std::vector<std::string>{} : split_args(text.substr(colon + 1));
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw std::invalid_argument("equation '" + head + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (head == "zeta2") {
    expect(0);
    return ZetaEquation::full_zeta_equals(Rational(2));
  }
  if (head == "odd2") {
    expect(0);
    return ZetaEquation::odd_zeta_equals(Rational(2));
  }
  if (head == "varsigma") {
    expect(1);
    return ZetaEquation::full_zeta_equals(1 / parse_positive(args[0]) + 1);
  }
  if (head == "oddsigma") {
    expect(1);
    return ZetaEquation::odd_zeta_equals(1 / parse_positive(args[0]) + 1);
  }
  if (head == "upsilon") {
    expect(2);
    const Rational a = parse_positive(args[0]);
    const Rational c = parse_positive(args[1]);
    return ZetaEquation::full_zeta_equals(1 / (a * c * c) + 1);
  }
  if (head == "trunclow") {
    expect(2);
    return ZetaEquation::truncated_low(parse_count(args[0]), parse_rational(args[1]));
  }
  if (head == "finite") {
    expect(2);
    return ZetaEquation::finite_set(parse_count(args[0]), parse_rational(args[1]));
  }
  throw std::invalid_argument("unknown equation '" + text + "'");
}

}  // namespace dirinv
