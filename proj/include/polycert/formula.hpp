#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycert/poly.hpp"
#include "polycert/realalg.hpp"

namespace polycert {

enum class Rel { LT, LE, EQ, NE, GE, GT };
enum class Quantifier { Exists, Forall };

struct QF;
using QFPtr = std::shared_ptr<const QF>;

// Quantifier-free formula tree over a single real variable. Atoms read
// "poly(x) rel 0"; the parser moves everything to the left-hand side.
struct QF {
    enum class Kind { True, False, Atom, Not, And, Or };
    Kind kind;
    Poly poly;  // Atom only
    Rel rel = Rel::EQ;
    QFPtr lhs;  // Not operand, or left conjunct/disjunct
    QFPtr rhs;  // right conjunct/disjunct
};

QFPtr qf_true();
QFPtr qf_false();
QFPtr qf_atom(Poly p, Rel rel);
QFPtr qf_not(QFPtr f);
QFPtr qf_and(QFPtr lhs, QFPtr rhs);
QFPtr qf_or(QFPtr lhs, QFPtr rhs);

// Structural equality (same shape, same atoms).
bool qf_equal(const QFPtr& a, const QFPtr& b);

// Nonempty proper subset of {-1, 0, +1}: the signs an atom allows its
// polynomial to take. Relations map to sign sets; negation complements.
class SignSet {
public:
    static SignSet of_rel(Rel r);
    SignSet complement() const { return SignSet(~mask_ & 0b111u); }
    bool contains(int sign) const { return (mask_ >> unsigned(sign + 1)) & 1u; }
    bool operator==(const SignSet& rhs) const { return mask_ == rhs.mask_; }

private:
    explicit SignSet(unsigned mask) : mask_(mask) {}
    unsigned mask_;  // bit 0: -1 allowed, bit 1: 0 allowed, bit 2: +1 allowed
};

struct SC;
using SCPtr = std::shared_ptr<const SC>;

// Negation-free formula whose atoms are sign conditions (poly, allowed
// signs). Constant-polynomial atoms have been folded to True/False.
struct SC {
    enum class Kind { True, False, Atom, And, Or };
    Kind kind;
    Poly poly;  // Atom only; always nonconstant
    SignSet allowed = SignSet::of_rel(Rel::EQ);
    SCPtr lhs;
    SCPtr rhs;
};

// A single-quantifier sentence: (forall|exists) var. body.
struct Formula {
    Quantifier quant;
    std::string var;
    QFPtr body;
};

// Thrown on malformed formula text; position is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

// Grammar (whitespace-insensitive):
//   formula := ("forall" | "exists") ident "." disj
//   disj    := conj { ("\/" | "∨" | "|") conj }
//   conj    := neg { ("/\" | "∧" | "&") neg }
//   neg     := ("~" | "¬") neg | "(" disj ")" | "true" | "false" | atom
//   atom    := expr ("<" | "<=" | "=" | "!=" | ">=" | ">") expr
//   expr    := polynomial arithmetic over the quantified variable with
//              rational literals ("2", "5/3", exact decimals "2.5"),
//              + - * ^ (nonnegative integer exponents) and parentheses.
// Mentioning any identifier other than the quantified variable is an error.
Formula parse_formula(const std::string& text);

// A bare polynomial expression such as "x^2 - 2"; the first identifier seen
// becomes the variable and any second one is an error.
Poly parse_poly(const std::string& text);

// Negation elimination plus constant folding: relations become sign sets,
// Not complements them, atoms with constant polynomials collapse.
SCPtr to_sign_form(const QFPtr& f);

// Direct relational evaluation of a quantifier-free body at a rational point
// (kept independent of the sign-set path so the two can cross-check).
bool eval_qf(const QFPtr& f, const Rational& x);

// Evaluate a sign-condition body at a real algebraic point, exactly.
bool eval_at(const SCPtr& f, const RealAlg& a);

// The distinct polynomials appearing in the atoms, in first-appearance order.
std::vector<Poly> collect_polys(const SCPtr& f);

// Quantifier dual with negated body: the formula equivalent to "not f".
Formula negate(const Formula& f);

std::string to_string(Rel r);
std::string to_string(const QFPtr& f, const std::string& var);
std::string to_string(const Formula& f);

}  // namespace polycert
