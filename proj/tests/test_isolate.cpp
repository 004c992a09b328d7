#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "polycert/isolate.hpp"

using namespace polycert;
using testutil::P;
using testutil::Q;

namespace {

// Upper/lower rational bound of a returned point's representation.
Rational upper(const RealAlg& a) { return a.is_rational() ? a.rational_value() : a.ub(); }
Rational lower(const RealAlg& a) { return a.is_rational() ? a.rational_value() : a.lb(); }

void check_sound(const Poly& p, const std::vector<RealAlg>& roots) {
    for (const RealAlg& r : roots) {
        CHECK(is_well_formed(r));
        CHECK(sign_at(p, r) == 0);
    }
    for (size_t i = 1; i < roots.size(); ++i) {
        CHECK(compare(roots[i - 1], roots[i]) == Order::Less);
        CHECK(upper(roots[i - 1]) <= lower(roots[i]));
    }
}

}  // namespace

TEST_CASE("isolating x^2 - 2 finds both square roots") {
    Poly p = P({-2, 0, 1});
    std::vector<RealAlg> roots = isolate_roots(p);
    REQUIRE(roots.size() == 2);
    check_sound(p, roots);
    // Semantically the same numbers as the reference encodings, whatever
    // intervals the search picked.
    CHECK(compare(roots[0], RealAlg::alg(p, Q("-2"), Q("-1/3"))) == Order::Equal);
    CHECK(compare(roots[1], RealAlg::alg(p, Q("7/6"), Q("19/12"))) == Order::Equal);
}

TEST_CASE("a high-degree double rational root comes back exact") {
    // x^10 - 2x^5 + 1 = (x^5 - 1)^2: the only real root is exactly 1.
    Poly p = P({1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1});
    std::vector<RealAlg> roots = isolate_roots(p);
    REQUIRE(roots.size() == 1);
    REQUIRE(roots[0].is_rational());
    CHECK(roots[0].rational_value() == 1);
}

TEST_CASE("polynomials with no real roots isolate to nothing") {
    CHECK(isolate_roots(P({1, 0, 1})).empty());
    CHECK(isolate_roots(P({2, 2, 1})).empty());
    CHECK(isolate_roots(P({7})).empty());
}

TEST_CASE("the zero polynomial cannot be isolated") {
    CHECK_THROWS_AS(isolate_roots(Poly{}), std::domain_error);
}

TEST_CASE("isolation handles clustered and repeated roots") {
    // Roots 0, 1/2, 9/16, 5/8: tight cluster forces real bisection work.
    Poly p = testutil::poly_from_roots({Q("0"), Q("1/2"), Q("9/16"), Q("5/8")});
    std::vector<RealAlg> roots = isolate_roots(p);
    REQUIRE(roots.size() == 4);
    check_sound(p, roots);

    // Multiplicities collapse: (x-1)^3 (x+2)^2 has two distinct roots.
    Poly q = poly_pow(P({-1, 1}), 3) * poly_pow(P({2, 1}), 2);
    std::vector<RealAlg> qroots = isolate_roots(q);
    REQUIRE(qroots.size() == 2);
    check_sound(q, qroots);
    CHECK(compare(qroots[0], RealAlg::rat(Q("-2"))) == Order::Equal);
    CHECK(compare(qroots[1], RealAlg::rat(Q("1"))) == Order::Equal);
}

TEST_CASE("root list length always matches the Sturm count") {
    std::mt19937 rng(555);
    for (int i = 0; i < 30; ++i) {
        Poly p = testutil::rand_poly(rng, 6, 8, true);
        if (p.is_constant()) continue;
        std::vector<RealAlg> roots = isolate_roots(p);
        CHECK(int(roots.size()) == count_roots(p, ExtRat::neg_inf(), ExtRat::pos_inf()));
        check_sound(p, roots);
    }
    // A rational root too big for factor search must still be found.
    Poly awkward = Poly({Q("-104729/9973"), Q("1")}) * P({-2, 0, 1}) * Poly({Q("1"), Q("0"), Q("1")});
    std::vector<RealAlg> roots = isolate_roots(awkward);
    CHECK(int(roots.size()) == 3);
    check_sound(awkward, roots);
}

TEST_CASE("planted rational roots are recovered exactly and in order") {
    std::mt19937 rng(808);
    for (int i = 0; i < 20; ++i) {
        std::set<Rational> distinct;
        int n = 1 + int(rng() % 5);
        while (int(distinct.size()) < n) distinct.insert(testutil::rand_rational(rng, 12, 5));
        std::vector<Rational> sorted(distinct.begin(), distinct.end());
        std::vector<Rational> with_repeats = sorted;
        with_repeats.push_back(sorted[rng() % sorted.size()]);
        Poly p = testutil::poly_from_roots(with_repeats);
        std::vector<RealAlg> roots = isolate_roots(p);
        REQUIRE(roots.size() == sorted.size());
        for (size_t k = 0; k < sorted.size(); ++k) {
            CHECK(compare(roots[k], RealAlg::rat(sorted[k])) == Order::Equal);
        }
    }
}

TEST_CASE("isolating several polynomials merges and deduplicates") {
    Poly sq2 = P({-2, 0, 1});
    Poly lin = P({-2, 1});
    std::vector<RealAlg> merged = isolate_all({sq2, lin});
    REQUIRE(merged.size() == 3);
    CHECK(compare(merged[0], RealAlg::alg(sq2, Q("-2"), Q("-1/3"))) == Order::Equal);
    CHECK(compare(merged[1], RealAlg::alg(sq2, Q("0"), Q("2"))) == Order::Equal);
    CHECK(compare(merged[2], RealAlg::rat(Q("2"))) == Order::Equal);
    for (size_t i = 1; i < merged.size(); ++i) {
        CHECK(compare(merged[i - 1], merged[i]) == Order::Less);
    }

    // sqrt(2) appears in two inputs but only once in the union; the double
    // rational root contributes its exact point.
    Poly tenth = P({1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1});
    std::vector<RealAlg> three = isolate_all({sq2, tenth, lin});
    REQUIRE(three.size() == 4);
    CHECK(compare(three[1], RealAlg::rat(Q("1"))) == Order::Equal);
    CHECK(three[1].is_rational());

    CHECK(isolate_all({}).empty());
    CHECK(isolate_all({sq2, sq2}).size() == 2);
    CHECK_THROWS_AS(isolate_all({sq2, Poly{}}), std::domain_error);
    CHECK_THROWS_AS(isolate_all({sq2, P({4})}), std::domain_error);
}
