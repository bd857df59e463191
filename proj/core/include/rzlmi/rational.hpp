#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rzlmi {

/// Exact rational number; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `NUM/DEN`, an integer, or a finite decimal such as `-0.75`.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// `NUM/DEN` always, even when DEN is 1.
std::string to_fraction_string(const Rational& q);

/// Integer form when DEN is 1, otherwise `NUM/DEN`.
std::string to_compact_string(const Rational& q);

int sign(const Rational& q);

/// Best rational approximation (continued fraction convergents) with denominator <= max_den.
Rational rationalize(double x, const Integer& max_den);

/// Shortest continued-fraction convergent within `tol` of x (|q - x| <= tol).
Rational rationalize_within(double x, double tol);

/// Exact square root if q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace rzlmi
