#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arcbound {

/// Exact rational scalar. gmpxx keeps every arithmetic result canonical
/// (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or an integer literal. Decimal notation is rejected
/// so binary floating point can never leak into an exact computation.
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer parse_integer(std::string_view text);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace arcbound
