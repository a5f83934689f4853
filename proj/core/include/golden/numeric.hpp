#pragma once

// Exact number types shared by every module. Big integers and rationals are
// GMP values; rationals produced by arithmetic are always canonical (reduced,
// positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace golden {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws ZeroDivision when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "num/den" with the denominator always written, e.g. "5/1", "-1/2".
std::string to_fraction_string(const Rational& r);

/// Shortest form: "5" for integers, "-1/2" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// Parses "7", "-3", "1/2", "-7/5". Throws std::invalid_argument on junk and
/// ZeroDivision on a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

/// r^e for any integer e; 0^0 == 1. Throws SingularPower for 0^negative.
Rational pow(const Rational& r, long e);
BigInt pow(const BigInt& n, unsigned long e);

/// Converts to long, throwing IndexOutOfRange if |n| > limit.
long to_index(const BigInt& n, long limit);

}  // namespace golden
