#pragma once

#include <string>
#include <variant>

#include "polycert/poly.hpp"
#include "polycert/sturm.hpp"

namespace polycert {

enum class Order { Less, Equal, Greater };

// A real algebraic number: either an exact rational, or the unique root of
// ipoly inside the open isolating interval (lb, ub).
class RealAlg {
public:
    static RealAlg rat(Rational value) { return RealAlg(std::move(value)); }
    static RealAlg alg(Poly ipoly, Rational lb, Rational ub) {
        return RealAlg(Interval{std::move(ipoly), std::move(lb), std::move(ub)});
    }

    bool is_rational() const { return std::holds_alternative<Rational>(rep_); }

    // Accessors require the matching alternative; enforced by std::get.
    const Rational& rational_value() const { return std::get<Rational>(rep_); }
    const Poly& ipoly() const { return std::get<Interval>(rep_).ipoly; }
    const Rational& lb() const { return std::get<Interval>(rep_).lb; }
    const Rational& ub() const { return std::get<Interval>(rep_).ub; }

private:
    struct Interval {
        Poly ipoly;
        Rational lb;
        Rational ub;
    };
    explicit RealAlg(Rational value) : rep_(std::move(value)) {}
    explicit RealAlg(Interval iv) : rep_(std::move(iv)) {}
    std::variant<Rational, Interval> rep_;
};

// True iff (lb, ub) isolates a root of p: lb < ub, p(lb)*p(ub) < 0, and p has
// exactly one real root in the open interval. False (never an error) on
// degenerate input such as p = 0 or lb >= ub.
bool valid_isolation(const Poly& p, const Rational& lb, const Rational& ub);

// Rationals are always well-formed; interval representations must satisfy
// valid_isolation.
bool is_well_formed(const RealAlg& a);

// Halve the isolating interval, keeping the half that still brackets the
// root. A midpoint that is itself the root collapses the representation to
// that exact rational. Rationals pass through unchanged. Throws
// std::domain_error on an ill-formed representation.
RealAlg refine(const RealAlg& a);

// A rational within eps (> 0) of the represented real: the interval is
// halved until narrower than eps and the midpoint returned.
Rational approx(const RealAlg& a, const Rational& eps);

// Exact sign of q at the represented real, computed from sign variations of
// the remainder sequence of (ipoly, ipoly' * q) over the isolating interval —
// no numeric approximation anywhere. Throws on an ill-formed representation.
int sign_at(const Poly& q, const RealAlg& a);

// Total order on represented reals, independent of representation. Equality
// of two interval representations is decided through their polynomial gcd.
Order compare(const RealAlg& a, const RealAlg& b);

// Some rational strictly between a and b. Requires compare(a, b) == Less;
// throws std::domain_error otherwise.
Rational rational_between(const RealAlg& a, const RealAlg& b);

// Certificate-entry rendering: "Rat 7/3" or "Arep [:-2, 0, 1:] (-2) (-1/3)"
// (coefficients ascending; negative endpoints parenthesized).
std::string to_string(const RealAlg& a);

}  // namespace polycert
