#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace edalg {

/// Exact rational number; always kept canonical (den > 0, gcd(num, den) = 1).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Serialises as "p/q" in lowest terms (integers carry "/1").
std::string to_string(const Rational& q);

/// Short human form: "p" for integers, "p/q" otherwise.
std::string to_display(const Rational& q);

}  // namespace edalg
