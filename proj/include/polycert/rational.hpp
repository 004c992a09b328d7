#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polycert {

// Exact arbitrary-precision rational scalar. GMP keeps every value canonical
// (positive denominator, fully reduced) and all arithmetic is exact.
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

// Accepts "n", "n/d" and exact decimal literals ("-2.5" == -5/2), with an
// optional leading sign. Throws std::invalid_argument on anything else.
Rational rational_from_string(std::string_view text);

// Canonical form: "n" or "n/d" with d > 1. Never emits decimals.
std::string to_string(const Rational& q);

}  // namespace polycert
