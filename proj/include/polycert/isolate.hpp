#pragma once

#include <vector>

#include "polycert/realalg.hpp"

namespace polycert {

// All distinct real roots of p in strictly increasing order. Rational roots
// are reported as exact rationals where the search finds them (always for
// linear factors with modest coefficients); every interval representation
// uses the square-free part of p as its defining polynomial. Throws
// std::domain_error on the zero polynomial.
std::vector<RealAlg> isolate_roots(const Poly& p);

// Sorted union, without duplicates, of the real roots of every polynomial in
// ps. Each member must be nonzero and nonconstant; throws std::domain_error
// otherwise.
std::vector<RealAlg> isolate_all(const std::vector<Poly>& ps);

}  // namespace polycert
