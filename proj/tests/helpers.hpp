#pragma once

#include <random>
#include <vector>

#include "polycert/isolate.hpp"
#include "polycert/poly.hpp"
#include "polycert/realalg.hpp"
#include "polycert/sturm.hpp"

namespace testutil {

using namespace polycert;

// Dense integer coefficient list, ascending: P({2, -3, 1}) is x^2 - 3x + 2.
inline Poly P(std::initializer_list<long> ascending) {
    std::vector<Rational> coeffs;
    for (long v : ascending) coeffs.emplace_back(static_cast<long>(v), 1L);
    return Poly(std::move(coeffs));
}

inline Rational Q(const char* text) { return rational_from_string(text); }

inline Rational rand_rational(std::mt19937& rng, int num_bound, int den_bound) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Poly rand_poly(std::mt19937& rng, int max_deg, int coeff_bound, bool nonzero = true) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    while (true) {
        std::vector<Rational> c(deg_dist(rng) + 1);
        for (Rational& x : c) x = coeff(rng);
        Poly p(std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

// A rational that is not a root of p, drawn from a modest grid.
inline Rational rand_nonroot(std::mt19937& rng, const Poly& p, int bound) {
    while (true) {
        Rational r = rand_rational(rng, bound, 4);
        if (p(r) != 0) return r;
    }
}

// Product of (x - r) over the given roots; repeats allowed.
inline Poly poly_from_roots(const std::vector<Rational>& roots) {
    Poly p{{Rational(1)}};
    for (const Rational& r : roots) p = p * Poly{{Rational(-r), Rational(1)}};
    return p;
}

// Independent evaluation of the Tarski query: isolate the roots of p, keep
// those inside (a, b), and add up the exact signs of q there.
inline int sum_signs_over_roots(const Poly& q, const Poly& p, const ExtRat& a, const ExtRat& b) {
    int total = 0;
    for (const RealAlg& root : isolate_roots(p)) {
        if (a.is_finite() && compare(RealAlg::rat(a.value()), root) != Order::Less) continue;
        if (b.is_finite() && compare(root, RealAlg::rat(b.value())) != Order::Less) continue;
        total += sign_at(q, root);
    }
    return total;
}

}  // namespace testutil
