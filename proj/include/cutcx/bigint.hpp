#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cutcx {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Combinatorial binomial coefficient: zero when b < 0 or b > a.
/// Throws InvalidArgument for a < 0, where the polynomial convention
/// (see RatPolynomial::binomial) is the one that applies.
BigInt binomial(std::int64_t a, std::int64_t b);

std::string to_string(const BigInt& value);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Converts when the value fits in int64; throws CapacityError otherwise.
std::int64_t to_int64(const BigInt& value);

}  // namespace cutcx
