#include "polycert/sturm.hpp"

#include <stdexcept>

namespace polycert {

const Rational& ExtRat::value() const {
    if (tag_ != Tag::Finite) throw std::domain_error("value() of an infinite endpoint");
    return value_;
}

std::strong_ordering ExtRat::operator<=>(const ExtRat& rhs) const {
    if (tag_ != rhs.tag_) return tag_ <=> rhs.tag_;
    if (tag_ != Tag::Finite) return std::strong_ordering::equal;
    int c = cmp(value_, rhs.value_);
    return c <=> 0;
}

std::string to_string(const ExtRat& x) {
    if (x.is_neg_inf()) return "-inf";
    if (x.is_pos_inf()) return "+inf";
    return to_string(x.value());
}

int sign_ext(const Poly& p, const ExtRat& x) {
    if (x.is_finite()) return sign_of(p(x.value()));
    int lead_sign = sign_of(p.lead());
    if (x.is_pos_inf()) return lead_sign;
    return p.degree() % 2 == 0 ? lead_sign : -lead_sign;
}

namespace {

// Divide out the (positive) rational content, leaving coprime integer
// coefficients. Signs are untouched, which is all sign variations care about.
Poly positive_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd(0);
    mpz_class den_lcm(1);
    for (const Rational& c : p.coeffs()) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    return p * scale;
}

}  // namespace

PolySeq signed_rem_seq(const Poly& p, const Poly& q) {
    if (p.is_zero()) throw std::domain_error("signed remainder sequence of the zero polynomial");
    PolySeq seq{p};
    if (q.is_zero()) return seq;
    seq.push_back(q);
    while (true) {
        const Poly& a = seq[seq.size() - 2];
        const Poly& b = seq.back();
        Poly r = -poly_divmod(a, b).rem;
        if (r.is_zero()) break;
        seq.push_back(positive_primitive(r));
    }
    return seq;
}

int sign_variations(const PolySeq& seq, const ExtRat& x) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const Poly& p : seq) signs.push_back(sign_ext(p, x));

    int count = 0;
    while (signs.size() >= 2) {
        int s0 = signs[0];
        int s1 = signs[1];
        if (s0 * s1 == -1) {
            ++count;
            signs.erase(signs.begin());
        } else if (s0 * s1 == 1 || s0 == 0) {
            signs.erase(signs.begin());
        } else {  // s1 == 0, s0 != 0
            signs.erase(signs.begin() + 1);
        }
    }
    return count;
}

int variation_diff(const ExtRat& a, const ExtRat& b, const Poly& p, const Poly& q) {
    PolySeq seq = signed_rem_seq(p, q);
    return sign_variations(seq, a) - sign_variations(seq, b);
}

int cross(const Poly& p, const Rational& a, const Rational& b) {
    Rational pa = p(a);
    Rational pb = p(b);
    if (sign_of(pa) * sign_of(pb) >= 0) return 0;
    return pa < pb ? 1 : -1;
}

int tarski_query(const Poly& q, const Poly& p, const ExtRat& a, const ExtRat& b) {
    if (p.is_zero()) throw std::domain_error("Tarski query against the zero polynomial");
    if (!(a < b)) throw std::domain_error("Tarski query requires a < b");
    if (a.is_finite() && p(a.value()) == 0)
        throw std::domain_error("Tarski query endpoint is a root");
    if (b.is_finite() && p(b.value()) == 0)
        throw std::domain_error("Tarski query endpoint is a root");
    return variation_diff(a, b, p, pderiv(p) * q);
}

int count_roots(const Poly& p, const ExtRat& a, const ExtRat& b) {
    return tarski_query(Poly{{Rational(1)}}, p, a, b);
}

}  // namespace polycert
