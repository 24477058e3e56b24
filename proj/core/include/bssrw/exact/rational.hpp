#pragma once

#include <gmpxx.h>

#include <string>

namespace bssrw {

using Integer = mpz_class;
// Always canonical: gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);
Rational abs(const Rational& value);
int sign(const Rational& value);
Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

// True iff value = 2^k * n for integer n, i.e. the denominator is a power of two.
bool is_dyadic(const Rational& value);

// Largest dyadic multiple of 2^-bits that is <= value (resp. smallest >= value).
Rational round_down(const Rational& value, unsigned bits);
Rational round_up(const Rational& value, unsigned bits);

// Exact real d-th root if the rational is a perfect d-th power.
bool exact_root(const Rational& value, unsigned d, Rational& root);

// The rational with the smallest denominator in [lo, hi] (lo <= hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

// Decimal rendering truncated toward zero after `digits` fractional digits.
std::string to_decimal(const Rational& value, int digits);

}  // namespace bssrw
