#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rotlab {

/// Arbitrary precision rational, always kept canonical (den > 0, gcd 1).
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long long num, long long den = 1);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Accepts "a", "-a", "a/b". Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace rotlab
