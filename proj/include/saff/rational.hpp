#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace saff {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Renders a rational as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace saff
