#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polycert/rational.hpp"

namespace polycert {

// Univariate polynomial over the rationals, stored densely in ascending
// degree order with no trailing zero coefficients. The zero polynomial is
// the empty coefficient vector and has degree -1 by convention.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending_coeffs);
    Poly(std::initializer_list<Rational> ascending_coeffs);

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Coefficient of x^i; zero beyond the degree.
    Rational coeff(size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Leading coefficient; zero for the zero polynomial.
    Rational lead() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    // Exact evaluation by Horner's rule.
    Rational operator()(const Rational& x) const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rational& scalar) const;
    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    void strip();
    std::vector<Rational> coeffs_;
};

inline Poly operator*(const Rational& scalar, const Poly& p) { return p * scalar; }

struct DivMod {
    Poly quot;
    Poly rem;
};

// Exact polynomial division with remainder: p = quot * q + rem, where rem is
// zero or deg(rem) < deg(q). Throws std::domain_error if q is zero.
DivMod poly_divmod(const Poly& p, const Poly& q);

// Formal derivative.
Poly pderiv(const Poly& p);

// p scaled so its leading coefficient is 1. Throws std::domain_error on zero.
Poly monic(const Poly& p);

// Monic greatest common divisor. gcd(p, 0) = monic(p); gcd(0, 0) is an error.
Poly poly_gcd(const Poly& p, const Poly& q);

// Monic square-free polynomial with the same roots as p, i.e. p / gcd(p, p').
// Throws std::domain_error on the zero polynomial.
Poly square_free_part(const Poly& p);

// Cauchy bound B = 1 + max_i |a_i| / |a_n|: every real root of p lies in
// [-B, B]. Requires degree >= 1.
Rational root_bound(const Poly& p);

// p^n for n >= 0 (p^0 = 1, including 0^0).
Poly poly_pow(const Poly& p, unsigned n);

// Human-readable rendering, highest degree first, e.g. "x^2 - 3*x + 2".
std::string to_string(const Poly& p, const std::string& var = "x");

}  // namespace polycert
