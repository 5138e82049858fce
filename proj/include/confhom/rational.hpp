#pragma once

#include <gmpxx.h>

#include <string>

namespace confhom {

// All coefficients in the pipeline are exact rationals; no floating point.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" with decimal integers p, q (q > 0 after normalization).
// Throws parse_error on anything else.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

} // namespace confhom
