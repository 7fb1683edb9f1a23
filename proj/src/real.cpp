#include "dirinv/real.hpp"

#include <sstream>

namespace dirinv {

Real to_real(const Rational& q) {
  Real out;
  mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

Real round_up(const Real& x) {
  static const Real inflation = Real(1) + Real("1e-60");
  static const Real deflation = Real(1) - Real("1e-60");
  if (x > 0) return x * inflation;
  if (x < 0) return x * deflation;
  return x;
}

int compare(const Real& x, const Rational& q) {
  const int c = mpfr_cmp_q(x.backend().data(), q.get_mpq_t());
  return (c > 0) - (c < 0);
}

std::string format_real(const Real& x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

}  // namespace dirinv
