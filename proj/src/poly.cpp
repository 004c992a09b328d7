#include "polycert/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace polycert {

Poly::Poly(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    strip();
}

Poly::Poly(std::initializer_list<Rational> ascending_coeffs) : coeffs_(ascending_coeffs) {
    strip();
}

void Poly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return Poly{};
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& scalar) const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * scalar;
    return Poly(std::move(out));
}

DivMod poly_divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p.degree() < q.degree()) return {Poly{}, p};

    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quot(p.degree() - q.degree() + 1, Rational(0));
    const Rational qlead = q.lead();
    for (int d = p.degree(); d >= q.degree(); --d) {
        Rational c = rem[d] / qlead;
        if (c == 0) continue;
        quot[d - q.degree()] = c;
        for (int i = 0; i <= q.degree(); ++i) rem[d - q.degree() + i] -= c * q.coeff(i);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly pderiv(const Poly& p) {
    if (p.degree() < 1) return Poly{};
    std::vector<Rational> out(p.degree());
    for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeff(i) * Rational(i);
    return Poly(std::move(out));
}

Poly monic(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("monic of the zero polynomial");
    return p * (Rational(1) / p.lead());
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Poly a = p;
    Poly b = q;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly square_free_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
    if (p.is_constant()) return Poly{{Rational(1)}};
    Poly g = poly_gcd(p, pderiv(p));
    return monic(poly_divmod(p, g).quot);
}

Rational root_bound(const Poly& p) {
    if (p.degree() < 1) throw std::domain_error("root bound requires degree >= 1");
    Rational lead_abs = abs(p.lead());
    Rational max_abs(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coeff(i));
        if (a > max_abs) max_abs = a;
    }
    return Rational(1) + max_abs / lead_abs;
}

Poly poly_pow(const Poly& p, unsigned n) {
    Poly result{{Rational(1)}};
    Poly base = p;
    while (n > 0) {
        if (n & 1u) result = result * base;
        base = base * base;
        n >>= 1u;
    }
    return result;
}

std::string to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (i == 0) {
            out << to_string(a);
        } else {
            if (a != 1) out << to_string(a) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

}  // namespace polycert
