#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "polycert/poly.hpp"

namespace polycert {

// Extended rational line: -inf < every finite value < +inf. Used as interval
// endpoints for root counting over unbounded ranges.
class ExtRat {
public:
    static ExtRat neg_inf() { return ExtRat(Tag::NegInf, Rational(0)); }
    static ExtRat pos_inf() { return ExtRat(Tag::PosInf, Rational(0)); }
    ExtRat(Rational value) : tag_(Tag::Finite), value_(std::move(value)) {}  // NOLINT: implicit

    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }

    // Finite value; throws std::domain_error at infinity.
    const Rational& value() const;

    bool operator==(const ExtRat& rhs) const {
        return tag_ == rhs.tag_ && (tag_ != Tag::Finite || value_ == rhs.value_);
    }
    std::strong_ordering operator<=>(const ExtRat& rhs) const;

private:
    enum class Tag { NegInf, Finite, PosInf };
    ExtRat(Tag tag, Rational value) : tag_(tag), value_(std::move(value)) {}
    Tag tag_;
    Rational value_;
};

std::string to_string(const ExtRat& x);

using PolySeq = std::vector<Poly>;

// Sign of p at an extended point: at +inf the sign of the leading
// coefficient, at -inf that sign flipped when the degree is odd.
int sign_ext(const Poly& p, const ExtRat& x);

// Signed remainder sequence starting [p, q], each further element the negated
// remainder of the two before it, stopping at the last nonzero element.
// Elements after the first two are rescaled by positive rationals to keep
// integer-sized coefficients; this never changes any sign. Requires p != 0.
PolySeq signed_rem_seq(const Poly& p, const Poly& q);

// Number of sign changes in the sequence evaluated at x, ignoring zeros.
int sign_variations(const PolySeq& seq, const ExtRat& x);

// Var(seq; a) - Var(seq; b) for the signed remainder sequence of (p, q).
int variation_diff(const ExtRat& a, const ExtRat& b, const Poly& p, const Poly& q);

// +1 if p crosses from negative to positive over [a, b], -1 for the opposite
// crossing, 0 when p(a) * p(b) >= 0. Endpoints must be finite.
int cross(const Poly& p, const Rational& a, const Rational& b);

// Tarski query: the sum of sgn(q(x)) over the distinct real roots x of p in
// the open interval (a, b). Requires p != 0 and a < b; finite endpoints must
// not be roots of p. Throws std::domain_error otherwise.
int tarski_query(const Poly& q, const Poly& p, const ExtRat& a, const ExtRat& b);

// Number of distinct real roots of p in the open interval (a, b). Extended
// endpoints allowed; finite endpoints must not be roots. Requires p != 0.
int count_roots(const Poly& p, const ExtRat& a, const ExtRat& b);

}  // namespace polycert
