#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace algtool {

/// Exact rational. GMP keeps numerator/denominator reduced with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;

using ComplexF = std::complex<double>;

/// Parses "3", "-3/4" or a decimal such as "0.125" exactly.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Best rational approximation with denominator at most `max_den`.
Rational rational_approximation(double x, long max_den);

bool is_prime(long n);

}  // namespace algtool
