#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jacklab {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p/q" or a finite decimal such as "0.25". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

Rational factorial(unsigned n);

}  // namespace jacklab
