#include <doctest.h>

#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "polycert/poly.hpp"

using namespace polycert;
using testutil::P;
using testutil::Q;

TEST_CASE("polynomial normalization, degree, and coefficient access") {
    Poly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeff(0) == 0);
    CHECK(z.coeff(17) == 0);

    Poly p({Q("1"), Q("2"), Q("0"), Q("0")});  // trailing zeros get stripped
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(2) == 0);
    CHECK(p.lead() == 2);

    CHECK(P({0}).is_zero());
    CHECK(P({5}).degree() == 0);
}

TEST_CASE("polynomial arithmetic matches pointwise evaluation") {
    std::mt19937 rng(101);
    for (int i = 0; i < 80; ++i) {
        Poly a = testutil::rand_poly(rng, 5, 8, false);
        Poly b = testutil::rand_poly(rng, 5, 8, false);
        Rational x = testutil::rand_rational(rng, 9, 5);
        CHECK((a + b)(x) == a(x) + b(x));
        CHECK((a - b)(x) == a(x) - b(x));
        CHECK((a * b)(x) == Rational(a(x) * b(x)));
        CHECK((-a)(x) == -a(x));
        CHECK((Q("3/2") * a)(x) == Rational(Q("3/2") * a(x)));
    }
    CHECK(P({1, 2}) * Poly{} == Poly{});
    CHECK(P({-3, 4, 2, 4, -4, 0, 0, 0, 0, 0, 1})(Q("1")) == 4);
}

TEST_CASE("division produces quotient and remainder with the degree bound") {
    std::mt19937 rng(202);
    for (int i = 0; i < 60; ++i) {
        Poly a = testutil::rand_poly(rng, 7, 6, false);
        Poly b = testutil::rand_poly(rng, 4, 6, true);
        auto [quo, rem] = poly_divmod(a, b);
        CHECK(a == quo * b + rem);
        CHECK(rem.degree() < b.degree());
    }
    // Exact division leaves no remainder.
    Poly prod = P({-1, 1}) * P({2, 3, 1});
    auto [q1, r1] = poly_divmod(prod, P({-1, 1}));
    CHECK(r1.is_zero());
    CHECK(q1 == P({2, 3, 1}));

    CHECK_THROWS_AS(poly_divmod(P({1, 1}), Poly{}), std::domain_error);
}

TEST_CASE("derivative satisfies linearity and the product rule") {
    CHECK(pderiv(P({2, -3, 1})) == P({-3, 2}));
    CHECK(pderiv(P({7})).is_zero());
    CHECK(pderiv(Poly{}).is_zero());
    std::mt19937 rng(303);
    for (int i = 0; i < 40; ++i) {
        Poly a = testutil::rand_poly(rng, 5, 6, false);
        Poly b = testutil::rand_poly(rng, 5, 6, false);
        CHECK(pderiv(a * b) == pderiv(a) * b + a * pderiv(b));
        CHECK(pderiv(a + b) == pderiv(a) + pderiv(b));
    }
}

TEST_CASE("gcd divides both inputs and is monic") {
    std::mt19937 rng(404);
    for (int i = 0; i < 40; ++i) {
        Poly a = testutil::rand_poly(rng, 5, 5, true);
        Poly b = testutil::rand_poly(rng, 5, 5, true);
        Poly g = poly_gcd(a, b);
        CHECK(g.lead() == 1);
        CHECK(poly_divmod(a, g).rem.is_zero());
        CHECK(poly_divmod(b, g).rem.is_zero());
    }
    // A planted common factor always shows up in the gcd.
    for (int i = 0; i < 30; ++i) {
        Poly f = testutil::rand_poly(rng, 3, 5, true);
        if (f.degree() < 1) continue;
        Poly a = f * testutil::rand_poly(rng, 3, 5, true);
        Poly b = f * testutil::rand_poly(rng, 3, 5, true);
        Poly g = poly_gcd(a, b);
        // The planted factor divides the gcd.
        CHECK(poly_divmod(g, monic(f)).rem.is_zero());
    }
    CHECK(poly_gcd(P({2, 2}), Poly{}) == P({1, 1}));
    CHECK(poly_gcd(Poly{}, P({0, 0, 4})) == P({0, 0, 1}));
    CHECK_THROWS_AS(poly_gcd(Poly{}, Poly{}), std::domain_error);
}

TEST_CASE("square-free part drops multiplicities and keeps every root") {
    // (x-1)^2 (x+2)  ->  (x-1)(x+2)
    Poly p = P({-1, 1}) * P({-1, 1}) * P({2, 1});
    CHECK(square_free_part(p) == monic(P({-1, 1}) * P({2, 1})));
    // Already square-free input comes back monic.
    CHECK(square_free_part(P({-2, 0, 2})) == P({-1, 0, 1}));
    CHECK(square_free_part(P({5})) == P({1}));
    CHECK_THROWS_AS(square_free_part(Poly{}), std::domain_error);

    std::mt19937 rng(505);
    for (int i = 0; i < 30; ++i) {
        Poly f = testutil::rand_poly(rng, 3, 4, true);
        if (f.degree() < 1) continue;
        Poly sq = f * f * testutil::rand_poly(rng, 2, 4, true);
        Poly sf = square_free_part(sq);
        // The square-free part divides the original and shares no square.
        CHECK(poly_divmod(sq, sf).rem.is_zero());
        CHECK(poly_gcd(sf, pderiv(sf)).degree() == 0);
    }
}

TEST_CASE("root bound really bounds the roots") {
    CHECK(root_bound(P({0, 0, 1})) == 1);  // x^2: only root is 0
    CHECK(root_bound(P({-2, 0, 1})) == 3);
    CHECK_THROWS_AS(root_bound(P({7})), std::domain_error);
    CHECK_THROWS_AS(root_bound(Poly{}), std::domain_error);

    std::mt19937 rng(606);
    for (int i = 0; i < 25; ++i) {
        // Build a poly from known rational roots; every root must lie inside.
        std::vector<Rational> roots;
        int n = 1 + int(rng() % 4);
        for (int k = 0; k < n; ++k) roots.push_back(testutil::rand_rational(rng, 20, 7));
        Poly p = testutil::poly_from_roots(roots);
        Rational bound = root_bound(p);
        for (const Rational& r : roots) {
            CHECK(Rational(-bound) < r);
            CHECK(r < bound);
        }
    }
}

TEST_CASE("poly_pow is iterated multiplication") {
    CHECK(poly_pow(P({0, 1}), 0) == P({1}));
    CHECK(poly_pow(P({1, 1}), 2) == P({1, 2, 1}));
    CHECK(poly_pow(P({-1, 1}), 3) == P({-1, 3, -3, 1}));
    CHECK(poly_pow(Poly{}, 0) == P({1}));
    CHECK(poly_pow(Poly{}, 5) == Poly{});
}

TEST_CASE("polynomial printing is readable and parseable") {
    CHECK(to_string(P({2, -3, 1})) == "x^2 - 3*x + 2");
    CHECK(to_string(P({0, 1})) == "x");
    CHECK(to_string(P({-3})) == "-3");
    CHECK(to_string(Poly{}) == "0");
    CHECK(to_string(P({1, 0, -2})) == "-2*x^2 + 1");
    CHECK(to_string(Poly({Q("1/2"), Q("-1/3")})) == "-1/3*x + 1/2");
}
