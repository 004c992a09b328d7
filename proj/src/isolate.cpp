#include "polycert/isolate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polycert {

namespace {

// Trial-division budget for the rational-root search. Beyond it we simply
// skip the search: roots then surface as interval representations instead of
// exact rationals, which every consumer accepts.
constexpr unsigned long kDivisorIterationCap = 200000;
constexpr size_t kCandidateCap = 20000;

bool divisors_of(const mpz_class& n, std::vector<mpz_class>& out) {
    mpz_class a = abs(n);
    unsigned long iterations = 0;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (++iterations > kDivisorIterationCap) return false;
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
    }
    return true;
}

// The rational roots of sf (square-free, degree >= 1) that the divisor search
// can afford to find: always complete for linear polynomials and whenever the
// extreme integer coefficients stay within the trial-division budget.
std::vector<Rational> rational_roots(const Poly& sf) {
    std::vector<Rational> roots;
    if (sf.degree() == 1) {
        roots.push_back(Rational(-sf.coeff(0) / sf.coeff(1)));
        return roots;
    }

    Poly work = sf;
    if (work.coeff(0) == 0) {
        // Square-freeness means x divides exactly once.
        roots.emplace_back(0);
        work = poly_divmod(work, Poly{{Rational(0), Rational(1)}}).quot;
        if (work.degree() < 1) return roots;
    }

    // Clear denominators; candidates are then (divisor of constant term) over
    // (divisor of leading coefficient), up to sign.
    mpz_class den_lcm(1);
    for (const Rational& c : work.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    mpz_class lo_coeff;
    mpz_class hi_coeff;
    {
        Rational c0 = work.coeff(0) * Rational(den_lcm);
        Rational cn = work.lead() * Rational(den_lcm);
        lo_coeff = c0.get_num();
        hi_coeff = cn.get_num();
    }

    std::vector<mpz_class> num_divs;
    std::vector<mpz_class> den_divs;
    if (!divisors_of(lo_coeff, num_divs) || !divisors_of(hi_coeff, den_divs)) return roots;
    if (num_divs.size() * den_divs.size() > kCandidateCap) return roots;

    std::set<Rational> candidates;
    for (const mpz_class& n : num_divs)
        for (const mpz_class& d : den_divs) {
            Rational c(n, d);
            c.canonicalize();
            candidates.insert(c);
            candidates.insert(Rational(-c));
        }
    for (const Rational& c : candidates)
        if (work(c) == 0) roots.push_back(c);
    std::sort(roots.begin(), roots.end());
    return roots;
}

class Isolator {
public:
    explicit Isolator(Poly sf) : sf_(std::move(sf)) {}

    std::vector<RealAlg> run() {
        std::vector<Rational> rat_roots = rational_roots(sf_);
        reduced_ = sf_;
        for (const Rational& r : rat_roots)
            reduced_ = poly_divmod(reduced_, Poly{{Rational(-r), Rational(1)}}).quot;
        if (reduced_.degree() < 1) {
            for (const Rational& r : rat_roots) out_.push_back(RealAlg::rat(r));
            return std::move(out_);
        }

        Rational bound = root_bound(sf_);
        while (sf_(bound) == 0 || sf_(-bound) == 0) bound += 1;

        // Excise a closed zone around each known rational root that provably
        // contains no further root; bisect the remaining segments.
        Rational lo = -bound;
        for (size_t i = 0; i < rat_roots.size(); ++i) {
            const Rational& r = rat_roots[i];
            Rational left_gap = r - (i == 0 ? Rational(-bound) : rat_roots[i - 1]);
            Rational right_gap = (i + 1 < rat_roots.size() ? rat_roots[i + 1] : bound) - r;
            Rational delta = std::min(left_gap, right_gap) / 2;
            while (reduced_(r - delta) == 0 || reduced_(r + delta) == 0 ||
                   count_roots(reduced_, Rational(r - delta), Rational(r + delta)) != 0)
                delta /= 2;
            bisect_segment(lo, Rational(r - delta));
            out_.push_back(RealAlg::rat(r));
            lo = r + delta;
        }
        bisect_segment(lo, bound);
        return std::move(out_);
    }

private:
    // Append, in order, every root of sf_ inside (lo, hi); the endpoints must
    // not be roots (maintained by every caller).
    void bisect_segment(const Rational& lo, const Rational& hi) {
        if (lo >= hi) return;
        int k = count_roots(sf_, lo, hi);
        if (k == 0) return;
        if (k == 1) {
            emit_cell(lo, hi);
            return;
        }
        Rational mid = (lo + hi) / 2;
        if (sf_(mid) == 0) {
            // A rational root the divisor search did not afford to find.
            // Carve out a zone holding only this root, then recurse around it.
            Rational delta = std::min(Rational(mid - lo), Rational(hi - mid)) / 2;
            while (sf_(mid - delta) == 0 || sf_(mid + delta) == 0 ||
                   count_roots(sf_, Rational(mid - delta), Rational(mid + delta)) != 1)
                delta /= 2;
            bisect_segment(lo, Rational(mid - delta));
            out_.push_back(RealAlg::rat(mid));
            bisect_segment(Rational(mid + delta), hi);
        } else {
            bisect_segment(lo, mid);
            bisect_segment(mid, hi);
        }
    }

    // Exactly one root of sf_ in (lo, hi): square-freeness gives the endpoint
    // sign change, so this is a valid isolating interval. Narrow it below
    // width 1 for compact output (which may land on the root exactly).
    void emit_cell(const Rational& lo, const Rational& hi) {
        RealAlg a = RealAlg::alg(sf_, lo, hi);
        while (!a.is_rational() && a.ub() - a.lb() >= 1) a = refine(a);
        out_.push_back(std::move(a));
    }

    Poly sf_;
    Poly reduced_;
    std::vector<RealAlg> out_;
};

}  // namespace

std::vector<RealAlg> isolate_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
    if (p.is_constant()) return {};
    return Isolator(square_free_part(p)).run();
}

std::vector<RealAlg> isolate_all(const std::vector<Poly>& ps) {
    std::vector<RealAlg> all;
    for (const Poly& p : ps) {
        if (p.is_zero() || p.is_constant())
            throw std::domain_error("root union requires nonconstant polynomials");
        std::vector<RealAlg> roots = isolate_roots(p);
        all.insert(all.end(), std::make_move_iterator(roots.begin()),
                   std::make_move_iterator(roots.end()));
    }
    std::sort(all.begin(), all.end(),
              [](const RealAlg& a, const RealAlg& b) { return compare(a, b) == Order::Less; });
    std::vector<RealAlg> merged;
    for (RealAlg& a : all) {
        if (!merged.empty() && compare(merged.back(), a) == Order::Equal) {
            // Prefer the exact-rational encoding when both name the same real.
            if (a.is_rational()) merged.back() = std::move(a);
            continue;
        }
        merged.push_back(std::move(a));
    }
    return merged;
}

}  // namespace polycert
