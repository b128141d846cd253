#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace exlp {

using Int = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Canonical rational num/den (gcd 1, positive denominator). den must be nonzero.
Rational make_rational(Int num, Int den);

/// Parses "p/q", "123", "-0.25", "1e-30", "3.5e+2" exactly. nullopt on bad input.
std::optional<Rational> parse_rational(const std::string& text);

/// "p/q" text, "/q" omitted when q == 1. Lossless.
std::string rational_to_string(const Rational& value);

bool is_integer(const Rational& value);
bool has_pow2_denominator(const Rational& value);

/// 2^exponent as a rational; exponent may be negative.
Rational pow2(long exponent);

/// floor(log2 x) for x > 0.
long floor_log2(const Rational& value);
/// Smallest t with 2^t >= x, for x > 0.
long ceil_log2(const Rational& value);

Int floor_to_int(const Rational& value);
Int ceil_to_int(const Rational& value);
/// Nearest integer, ties to the even candidate.
Int round_half_even(const Rational& value);

/// Largest z >= 0 with z*z <= x. Requires x >= 0.
Int floor_sqrt(const Rational& value);
/// Smallest z >= 0 with z*z >= x. Requires x >= 0.
Int ceil_sqrt(const Rational& value);

}  // namespace exlp
