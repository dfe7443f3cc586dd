#ifndef PENTALOSS_RATIONAL_HPP
#define PENTALOSS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pentaloss {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Scientific form "m.mmm...e<exp>" with `sig_digits` significant digits,
/// computed purely in integer arithmetic (round half up). Exact for values
/// far outside double range.
std::string to_scientific(const Rational& v, int sig_digits);

/// Double conversion that survives numerators/denominators with thousands
/// of digits (goes through the scientific form).
double to_double_safe(const Rational& v);

/// Published-table style: values >= 1e-3 as fixed three decimals; smaller
/// values in scientific notation with two significant digits (e.g. "5.6e-8").
/// Zero prints as "0".
std::string format_table(const Rational& v);

/// General display style: three significant figures, scientific below 1e-3.
std::string format_display(double v);

}  // namespace pentaloss

#endif
