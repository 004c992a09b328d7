#include "polycert/formula.hpp"

#include <cctype>

namespace polycert {

QFPtr qf_true() { return std::make_shared<const QF>(QF{QF::Kind::True, {}, Rel::EQ, {}, {}}); }
QFPtr qf_false() { return std::make_shared<const QF>(QF{QF::Kind::False, {}, Rel::EQ, {}, {}}); }
QFPtr qf_atom(Poly p, Rel rel) {
    return std::make_shared<const QF>(QF{QF::Kind::Atom, std::move(p), rel, {}, {}});
}
QFPtr qf_not(QFPtr f) {
    return std::make_shared<const QF>(QF{QF::Kind::Not, {}, Rel::EQ, std::move(f), {}});
}
QFPtr qf_and(QFPtr lhs, QFPtr rhs) {
    return std::make_shared<const QF>(QF{QF::Kind::And, {}, Rel::EQ, std::move(lhs), std::move(rhs)});
}
QFPtr qf_or(QFPtr lhs, QFPtr rhs) {
    return std::make_shared<const QF>(QF{QF::Kind::Or, {}, Rel::EQ, std::move(lhs), std::move(rhs)});
}

bool qf_equal(const QFPtr& a, const QFPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case QF::Kind::True:
        case QF::Kind::False:
            return true;
        case QF::Kind::Atom:
            return a->rel == b->rel && a->poly == b->poly;
        case QF::Kind::Not:
            return qf_equal(a->lhs, b->lhs);
        case QF::Kind::And:
        case QF::Kind::Or:
            return qf_equal(a->lhs, b->lhs) && qf_equal(a->rhs, b->rhs);
    }
    return false;
}

SignSet SignSet::of_rel(Rel r) {
    switch (r) {
        case Rel::LT: return SignSet(0b001);
        case Rel::LE: return SignSet(0b011);
        case Rel::EQ: return SignSet(0b010);
        case Rel::NE: return SignSet(0b101);
        case Rel::GE: return SignSet(0b110);
        case Rel::GT: return SignSet(0b100);
    }
    return SignSet(0b010);
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    Ident, Number, LParen, RParen, Dot, Plus, Minus, Star, Caret,
    Lt, Le, Eq, Ne, Ge, Gt, Not, And, Or, True, False, Forall, Exists, End
};

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> toks;
    size_t i = 0;
    auto rest_starts = [&](const char* lit) {
        return s.compare(i, std::char_traits<char>::length(lit), lit) == 0;
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (ident_start(c)) {
            while (i < s.size() && ident_char(s[i])) ++i;
            std::string word = s.substr(start, i - start);
            Tok kind = word == "forall"   ? Tok::Forall
                       : word == "exists" ? Tok::Exists
                       : word == "true"   ? Tok::True
                       : word == "false"  ? Tok::False
                                          : Tok::Ident;
            toks.push_back({kind, std::move(word), start});
        } else if (digit(c)) {
            while (i < s.size() && digit(s[i])) ++i;
            // "2.5" and "5/3" are single rational tokens; the separator is
            // consumed only when digits follow, so "1/\ ..." still lexes.
            if (i + 1 < s.size() && (s[i] == '.' || s[i] == '/') && digit(s[i + 1])) {
                ++i;
                while (i < s.size() && digit(s[i])) ++i;
            }
            toks.push_back({Tok::Number, s.substr(start, i - start), start});
        } else if (rest_starts("<=")) {
            toks.push_back({Tok::Le, "<=", start}); i += 2;
        } else if (rest_starts(">=")) {
            toks.push_back({Tok::Ge, ">=", start}); i += 2;
        } else if (rest_starts("!=")) {
            toks.push_back({Tok::Ne, "!=", start}); i += 2;
        } else if (rest_starts("==")) {
            toks.push_back({Tok::Eq, "==", start}); i += 2;
        } else if (rest_starts("/\\")) {
            toks.push_back({Tok::And, "/\\", start}); i += 2;
        } else if (rest_starts("\\/")) {
            toks.push_back({Tok::Or, "\\/", start}); i += 2;
        } else if (rest_starts("\xE2\x88\xA7")) {  // ∧
            toks.push_back({Tok::And, "∧", start}); i += 3;
        } else if (rest_starts("\xE2\x88\xA8")) {  // ∨
            toks.push_back({Tok::Or, "∨", start}); i += 3;
        } else if (rest_starts("\xC2\xAC")) {  // ¬
            toks.push_back({Tok::Not, "¬", start}); i += 2;
        } else {
            Tok kind;
            switch (c) {
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case '.': kind = Tok::Dot; break;
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '^': kind = Tok::Caret; break;
                case '<': kind = Tok::Lt; break;
                case '>': kind = Tok::Gt; break;
                case '=': kind = Tok::Eq; break;
                case '~': kind = Tok::Not; break;
                case '&': kind = Tok::And; break;
                case '|': kind = Tok::Or; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", start);
            }
            toks.push_back({kind, std::string(1, c), start});
            ++i;
        }
    }
    toks.push_back({Tok::End, "", s.size()});
    return toks;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Poly parse_poly_text() {
        Poly p = expr();
        if (peek().kind != Tok::End)
            throw ParseError("unexpected trailing input", peek().pos);
        return p;
    }

    Formula parse() {
        Quantifier quant;
        if (peek().kind == Tok::Forall) {
            quant = Quantifier::Forall;
        } else if (peek().kind == Tok::Exists) {
            quant = Quantifier::Exists;
        } else {
            throw ParseError("expected 'forall' or 'exists'", peek().pos);
        }
        ++i_;
        if (peek().kind != Tok::Ident)
            throw ParseError("expected a variable name after the quantifier", peek().pos);
        var_ = peek().text;
        ++i_;
        expect(Tok::Dot, "expected '.' after the quantified variable");
        QFPtr body = disj();
        if (peek().kind != Tok::End)
            throw ParseError("unexpected trailing input", peek().pos);
        return Formula{quant, var_, std::move(body)};
    }

private:
    const Token& peek() const { return toks_[i_]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++i_;
        return true;
    }
    void expect(Tok kind, const char* message) {
        if (!accept(kind)) throw ParseError(message, peek().pos);
    }

    QFPtr disj() {
        QFPtr f = conj();
        while (accept(Tok::Or)) f = qf_or(std::move(f), conj());
        return f;
    }

    QFPtr conj() {
        QFPtr f = neg();
        while (accept(Tok::And)) f = qf_and(std::move(f), neg());
        return f;
    }

    QFPtr neg() {
        if (accept(Tok::Not)) return qf_not(neg());
        if (accept(Tok::True)) return qf_true();
        if (accept(Tok::False)) return qf_false();
        if (peek().kind == Tok::LParen) {
            // "(" may open an arithmetic grouping inside an atom or a boolean
            // grouping; try the atom reading first and fall back.
            size_t saved = i_;
            try {
                return atom();
            } catch (const ParseError& atom_err) {
                i_ = saved;
                try {
                    ++i_;  // consume "("
                    QFPtr f = disj();
                    expect(Tok::RParen, "expected ')'");
                    return f;
                } catch (const ParseError& group_err) {
                    throw group_err.position() >= atom_err.position() ? group_err : atom_err;
                }
            }
        }
        return atom();
    }

    QFPtr atom() {
        Poly left = expr();
        Rel rel;
        switch (peek().kind) {
            case Tok::Lt: rel = Rel::LT; break;
            case Tok::Le: rel = Rel::LE; break;
            case Tok::Eq: rel = Rel::EQ; break;
            case Tok::Ne: rel = Rel::NE; break;
            case Tok::Ge: rel = Rel::GE; break;
            case Tok::Gt: rel = Rel::GT; break;
            default:
                throw ParseError("expected a relation (<, <=, =, !=, >=, >)", peek().pos);
        }
        ++i_;
        Poly right = expr();
        return qf_atom(left - right, rel);
    }

    Poly expr() {
        Poly p = term();
        while (true) {
            if (accept(Tok::Plus)) {
                p = p + term();
            } else if (accept(Tok::Minus)) {
                p = p - term();
            } else {
                return p;
            }
        }
    }

    Poly term() {
        Poly p = factor();
        while (accept(Tok::Star)) p = p * factor();
        return p;
    }

    Poly factor() {
        if (accept(Tok::Plus)) return factor();
        if (accept(Tok::Minus)) return -factor();
        Poly b = base();
        if (accept(Tok::Caret)) {
            const Token& e = peek();
            if (e.kind != Tok::Number || e.text.find('/') != std::string::npos ||
                e.text.find('.') != std::string::npos)
                throw ParseError("exponent must be a nonnegative integer", e.pos);
            mpz_class n(e.text, 10);  // explicit base; "0..." must not go octal
            if (!n.fits_uint_p() || n > 10000) throw ParseError("exponent too large", e.pos);
            ++i_;
            return poly_pow(b, n.get_ui());
        }
        return b;
    }

    Poly base() {
        const Token& t = peek();
        if (accept(Tok::LParen)) {
            Poly p = expr();
            expect(Tok::RParen, "expected ')'");
            return p;
        }
        if (t.kind == Tok::Number) {
            ++i_;
            try {
                return Poly{{rational_from_string(t.text)}};
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), t.pos);
            }
        }
        if (t.kind == Tok::Ident) {
            if (var_.empty()) {
                var_ = t.text;  // bare-expression mode: first identifier binds
            } else if (t.text != var_) {
                throw ParseError("unknown variable '" + t.text + "'; the formula is over '" +
                                     var_ + "'",
                                 t.pos);
            }
            ++i_;
            return Poly{{Rational(0), Rational(1)}};
        }
        throw ParseError("expected a number, variable, or '('", t.pos);
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
    std::string var_;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

Poly parse_poly(const std::string& text) { return Parser(text).parse_poly_text(); }

// ---------------------------------------------------------------------------
// Sign-condition normal form and evaluation

namespace {

SCPtr sc_leaf(SC::Kind kind) {
    return std::make_shared<const SC>(SC{kind, {}, SignSet::of_rel(Rel::EQ), {}, {}});
}

SCPtr sc_node(SC::Kind kind, SCPtr lhs, SCPtr rhs) {
    return std::make_shared<const SC>(
        SC{kind, {}, SignSet::of_rel(Rel::EQ), std::move(lhs), std::move(rhs)});
}

SCPtr convert(const QFPtr& f, bool negated) {
    switch (f->kind) {
        case QF::Kind::True:
            return sc_leaf(negated ? SC::Kind::False : SC::Kind::True);
        case QF::Kind::False:
            return sc_leaf(negated ? SC::Kind::True : SC::Kind::False);
        case QF::Kind::Not:
            return convert(f->lhs, !negated);
        case QF::Kind::And:
        case QF::Kind::Or: {
            bool conjunction = (f->kind == QF::Kind::And) != negated;
            return sc_node(conjunction ? SC::Kind::And : SC::Kind::Or, convert(f->lhs, negated),
                           convert(f->rhs, negated));
        }
        case QF::Kind::Atom: {
            SignSet allowed = SignSet::of_rel(f->rel);
            if (negated) allowed = allowed.complement();
            if (f->poly.is_constant()) {
                bool holds = allowed.contains(sign_of(f->poly.coeff(0)));
                return sc_leaf(holds ? SC::Kind::True : SC::Kind::False);
            }
            return std::make_shared<const SC>(SC{SC::Kind::Atom, f->poly, allowed, {}, {}});
        }
    }
    return sc_leaf(SC::Kind::False);
}

}  // namespace

SCPtr to_sign_form(const QFPtr& f) { return convert(f, false); }

bool eval_qf(const QFPtr& f, const Rational& x) {
    switch (f->kind) {
        case QF::Kind::True: return true;
        case QF::Kind::False: return false;
        case QF::Kind::Not: return !eval_qf(f->lhs, x);
        case QF::Kind::And: return eval_qf(f->lhs, x) && eval_qf(f->rhs, x);
        case QF::Kind::Or: return eval_qf(f->lhs, x) || eval_qf(f->rhs, x);
        case QF::Kind::Atom: {
            Rational v = f->poly(x);
            switch (f->rel) {
                case Rel::LT: return v < 0;
                case Rel::LE: return v <= 0;
                case Rel::EQ: return v == 0;
                case Rel::NE: return v != 0;
                case Rel::GE: return v >= 0;
                case Rel::GT: return v > 0;
            }
        }
    }
    return false;
}

bool eval_at(const SCPtr& f, const RealAlg& a) {
    switch (f->kind) {
        case SC::Kind::True: return true;
        case SC::Kind::False: return false;
        case SC::Kind::And: return eval_at(f->lhs, a) && eval_at(f->rhs, a);
        case SC::Kind::Or: return eval_at(f->lhs, a) || eval_at(f->rhs, a);
        case SC::Kind::Atom: return f->allowed.contains(sign_at(f->poly, a));
    }
    return false;
}

namespace {

void collect(const SCPtr& f, std::vector<Poly>& out) {
    switch (f->kind) {
        case SC::Kind::And:
        case SC::Kind::Or:
            collect(f->lhs, out);
            collect(f->rhs, out);
            return;
        case SC::Kind::Atom:
            for (const Poly& p : out)
                if (p == f->poly) return;
            out.push_back(f->poly);
            return;
        default:
            return;
    }
}

}  // namespace

std::vector<Poly> collect_polys(const SCPtr& f) {
    std::vector<Poly> out;
    collect(f, out);
    return out;
}

Formula negate(const Formula& f) {
    Quantifier dual =
        f.quant == Quantifier::Forall ? Quantifier::Exists : Quantifier::Forall;
    return Formula{dual, f.var, qf_not(f.body)};
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(Rel r) {
    switch (r) {
        case Rel::LT: return "<";
        case Rel::LE: return "<=";
        case Rel::EQ: return "=";
        case Rel::NE: return "!=";
        case Rel::GE: return ">=";
        case Rel::GT: return ">";
    }
    return "?";
}

namespace {

int precedence(QF::Kind k) {
    switch (k) {
        case QF::Kind::Or: return 1;
        case QF::Kind::And: return 2;
        case QF::Kind::Not: return 3;
        default: return 4;
    }
}

std::string print_qf(const QFPtr& f, const std::string& var);

// Parenthesize just enough that the left-associative parser rebuilds the
// identical tree: a right child at equal precedence needs the parentheses.
std::string print_child(const QFPtr& child, int parent_prec, bool right, const std::string& var) {
    int p = precedence(child->kind);
    bool wrap = p < parent_prec || (p == parent_prec && right);
    std::string s = print_qf(child, var);
    return wrap ? "(" + s + ")" : s;
}

std::string print_qf(const QFPtr& f, const std::string& var) {
    switch (f->kind) {
        case QF::Kind::True: return "true";
        case QF::Kind::False: return "false";
        case QF::Kind::Atom: return to_string(f->poly, var) + " " + to_string(f->rel) + " 0";
        case QF::Kind::Not: return "~" + print_child(f->lhs, 3, false, var);
        case QF::Kind::And:
            return print_child(f->lhs, 2, false, var) + " /\\ " + print_child(f->rhs, 2, true, var);
        case QF::Kind::Or:
            return print_child(f->lhs, 1, false, var) + " \\/ " + print_child(f->rhs, 1, true, var);
    }
    return "";
}

}  // namespace

std::string to_string(const QFPtr& f, const std::string& var) { return print_qf(f, var); }

std::string to_string(const Formula& f) {
    return (f.quant == Quantifier::Forall ? "forall " : "exists ") + f.var + ". " +
           print_qf(f.body, f.var);
}

}  // namespace polycert
