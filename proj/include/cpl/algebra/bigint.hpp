#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpl {

using BigInt = mpz_class;
using BigRational = mpq_class;

namespace algebra {

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws Errc::ParseError
/// or Errc::ZeroDivisor.
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

/// Canonical decimal form, "p/q" or "p" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// q^e for any integer e; throws Errc::ZeroDivisor for 0^e with e < 0.
BigRational pow(const BigRational& q, long e);
BigInt pow(const BigInt& z, unsigned long e);

/// Converts to a machine integer, throwing Errc::ExponentOverflow when it does
/// not fit.
long to_long(const BigInt& z);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt abs(const BigInt& z);
int sign(const BigInt& z);
int sign(const BigRational& q);

/// Content (gcd of entries, nonnegative) of an integer vector.
BigInt content(std::span<const BigInt> v);

/// Comma separated list, e.g. "-1,2,-1" or "1/2,3".
std::vector<BigRational> parse_rational_list(std::string_view text);
std::vector<long> parse_int_list(std::string_view text);

}  // namespace algebra
}  // namespace cpl
