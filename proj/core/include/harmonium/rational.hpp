#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace harmonium {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& q);

/// Exact power for a signed machine-word base.
BigInt power(std::int64_t base, unsigned long exponent);

/// "num/den" form used by every serialized rational (integers print as "k/1").
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "num/den" or a bare integer; throws DomainError otherwise.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

}  // namespace harmonium
