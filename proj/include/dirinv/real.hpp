#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "dirinv/rational.hpp"

namespace dirinv {

/// 80 decimal digits of working precision for bound evaluation.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>,
                                           boost::multiprecision::et_off>;

Real to_real(const Rational& q);

/// Pushes x away from zero by a relative 1e-60, which dominates the rounding
/// error of any bound expression evaluated at 80 digits.
Real round_up(const Real& x);

/// Exact sign of x - q.
int compare(const Real& x, const Rational& q);

/// 12 significant digits.
std::string format_real(const Real& x);

}  // namespace dirinv
