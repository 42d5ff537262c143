#pragma once

#include <gmpxx.h>

#include <string>

namespace g2lyap {

// Exact rational scalar. gmp keeps values in lowest terms with positive
// denominator after arithmetic; the helpers below preserve that for
// construction and parsing too.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Canonical text form, "p" or "p/q".
std::string rational_to_string(const Rational& q);

double rational_to_double(const Rational& q);

}  // namespace g2lyap
