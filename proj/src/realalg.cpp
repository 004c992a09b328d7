#include "polycert/realalg.hpp"

#include <sstream>
#include <stdexcept>

namespace polycert {

bool valid_isolation(const Poly& p, const Rational& lb, const Rational& ub) {
    if (p.is_zero() || lb >= ub) return false;
    if (sign_of(p(lb)) * sign_of(p(ub)) >= 0) return false;
    // The sign change guarantees the endpoints are non-roots, so the root
    // count below is well-defined.
    return count_roots(p, lb, ub) == 1;
}

bool is_well_formed(const RealAlg& a) {
    return a.is_rational() || valid_isolation(a.ipoly(), a.lb(), a.ub());
}

namespace {

void require_well_formed(const RealAlg& a, const char* op) {
    if (!is_well_formed(a))
        throw std::domain_error(std::string(op) + ": ill-formed real algebraic number");
}

}  // namespace

RealAlg refine(const RealAlg& a) {
    if (a.is_rational()) return a;
    require_well_formed(a, "refine");
    const Poly& p = a.ipoly();
    Rational mid = (a.lb() + a.ub()) / 2;
    Rational at_mid = p(mid);
    if (at_mid == 0) return RealAlg::rat(mid);
    if (sign_of(p(a.lb())) * sign_of(at_mid) < 0) return RealAlg::alg(p, a.lb(), mid);
    return RealAlg::alg(p, mid, a.ub());
}

Rational approx(const RealAlg& a, const Rational& eps) {
    if (eps <= 0) throw std::domain_error("approx requires eps > 0");
    RealAlg cur = a;
    while (!cur.is_rational()) {
        Rational width = cur.ub() - cur.lb();
        if (width < eps) return (cur.lb() + cur.ub()) / 2;
        cur = refine(cur);
    }
    return cur.rational_value();
}

int sign_at(const Poly& q, const RealAlg& a) {
    if (a.is_rational()) return sign_of(q(a.rational_value()));
    require_well_formed(a, "sign_at");
    const Poly& p = a.ipoly();
    // Tarski query of q against p over the isolating interval: the only root
    // of p inside is the represented number, so the query is sgn(q) there.
    return variation_diff(a.lb(), a.ub(), p, pderiv(p) * q);
}

namespace {

// Order of an interval representation relative to an exact rational.
Order compare_interval_rat(const RealAlg& a, const Rational& r) {
    if (a.ipoly()(r) == 0 && a.lb() < r && r < a.ub()) return Order::Equal;
    RealAlg cur = a;
    while (!cur.is_rational()) {
        if (cur.ub() <= r) return Order::Less;
        if (cur.lb() >= r) return Order::Greater;
        cur = refine(cur);
    }
    int c = cmp(cur.rational_value(), r);
    return c < 0 ? Order::Less : c > 0 ? Order::Greater : Order::Equal;
}

Order flip(Order o) {
    if (o == Order::Less) return Order::Greater;
    if (o == Order::Greater) return Order::Less;
    return Order::Equal;
}

}  // namespace

Order compare(const RealAlg& a, const RealAlg& b) {
    require_well_formed(a, "compare");
    require_well_formed(b, "compare");
    if (a.is_rational() && b.is_rational()) {
        int c = cmp(a.rational_value(), b.rational_value());
        return c < 0 ? Order::Less : c > 0 ? Order::Greater : Order::Equal;
    }
    if (b.is_rational()) return compare_interval_rat(a, b.rational_value());
    if (a.is_rational()) return flip(compare_interval_rat(b, a.rational_value()));

    // Both intervals. Equality first: a common value is a root of the gcd
    // lying in both intervals, and each isolating interval admits at most one
    // gcd root, so equality holds exactly when the overlap contains one.
    Poly g = poly_gcd(a.ipoly(), b.ipoly());
    if (sign_at(g, a) == 0 && sign_at(g, b) == 0) {
        Rational lo = std::max(a.lb(), b.lb());
        Rational hi = std::min(a.ub(), b.ub());
        // Overlap endpoints come from isolating intervals, so neither is a
        // root of g (g divides both defining polynomials).
        if (lo < hi && count_roots(g, lo, hi) == 1) return Order::Equal;
    }

    // Distinct values: shrink both intervals until they separate.
    RealAlg x = a;
    RealAlg y = b;
    while (!x.is_rational() && !y.is_rational()) {
        if (x.ub() <= y.lb()) return Order::Less;
        if (y.ub() <= x.lb()) return Order::Greater;
        x = refine(x);
        y = refine(y);
    }
    return compare(x, y);
}

Rational rational_between(const RealAlg& a, const RealAlg& b) {
    if (compare(a, b) != Order::Less)
        throw std::domain_error("rational_between requires a < b");
    RealAlg x = a;
    RealAlg y = b;
    while (true) {
        if (x.is_rational() && y.is_rational())
            return (x.rational_value() + y.rational_value()) / 2;
        if (x.is_rational()) {
            if (y.lb() > x.rational_value()) return (x.rational_value() + y.lb()) / 2;
            y = refine(y);
        } else if (y.is_rational()) {
            if (x.ub() < y.rational_value()) return (x.ub() + y.rational_value()) / 2;
            x = refine(x);
        } else {
            if (x.ub() <= y.lb()) return (x.ub() + y.lb()) / 2;
            x = refine(x);
            y = refine(y);
        }
    }
}

namespace {

std::string endpoint_string(const Rational& q) {
    std::string s = to_string(q);
    return q < 0 ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const RealAlg& a) {
    if (a.is_rational()) return "Rat " + to_string(a.rational_value());
    std::ostringstream out;
    out << "Arep [:";
    const Poly& p = a.ipoly();
    if (p.is_zero()) {
        out << "0";
    } else {
        for (int i = 0; i <= p.degree(); ++i) {
            if (i > 0) out << ", ";
            out << to_string(p.coeff(i));
        }
    }
    out << ":] " << endpoint_string(a.lb()) << " " << endpoint_string(a.ub());
    return out.str();
}

}  // namespace polycert
