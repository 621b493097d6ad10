#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vaffine {

// Arbitrary-precision rational in canonical form (gcd(num, den) = 1, den > 0).
using BigRational = mpq_class;
using BigInteger = mpz_class;

// Parses "a" or "a/b" with optional leading sign; throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& q);

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }

// Throws std::domain_error on zero.
BigRational inverse(const BigRational& q);

// Lifts a rational into the field of `like`; the identity for Q.
inline BigRational embed(const BigRational& q, const BigRational& /*like*/) { return q; }


}  // namespace vaffine
