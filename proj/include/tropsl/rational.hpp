#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tropsl {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Parses "a" or "a/b" (optional leading sign). Floats and empty
// denominators are rejected with ParseError.
Rational parse_rational(std::string_view text);

// Canonical "a/b" form, or "a" when the denominator is 1.
std::string format_rational(const Rational& q);

// Parses a comma separated list of rationals, e.g. "1,-1/2,3".
RationalVector parse_rational_list(std::string_view text);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

bool is_zero_vector(std::span<const Rational> v);

// Scales v by a positive rational so that it becomes a primitive integer
// vector. Direction (and hence the half-space a.x >= 0) is preserved.
RationalVector primitive_direction(std::span<const Rational> v);

}  // namespace tropsl
