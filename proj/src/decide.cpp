#include "polycert/decide.hpp"

#include <algorithm>
#include <stdexcept>

#include "polycert/isolate.hpp"

namespace polycert {

bool check_existential(const SCPtr& body, const RealAlg& witness, CheckReport& report) {
    if (!is_well_formed(witness)) {
        report.add("witness well-formed", false, to_string(witness) + " is not a valid isolation");
        return false;
    }
    report.add("witness well-formed", true, to_string(witness));
    bool sat = eval_at(body, witness);
    report.add("witness satisfies body", sat, to_string(witness));
    return sat;
}

namespace {

// Canonical order with duplicates merged; exact-rational encodings win when
// two entries name the same real.
std::vector<RealAlg> sort_dedup(std::vector<RealAlg> points) {
    std::sort(points.begin(), points.end(),
              [](const RealAlg& a, const RealAlg& b) { return compare(a, b) == Order::Less; });
    std::vector<RealAlg> out;
    for (RealAlg& p : points) {
        if (!out.empty() && compare(out.back(), p) == Order::Equal) {
            if (p.is_rational()) out.back() = std::move(p);
            continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

Rational step_below(const RealAlg& a) {
    return (a.is_rational() ? a.rational_value() : a.lb()) - 1;
}

Rational step_above(const RealAlg& a) {
    return (a.is_rational() ? a.rational_value() : a.ub()) + 1;
}

// The certificate points interleaved with rationals: one below the least
// point, one strictly between each consecutive pair, one above the greatest.
// One representative per region of the induced decomposition of the line.
std::vector<RealAlg> decomposition_samples(const std::vector<RealAlg>& sorted_points) {
    if (sorted_points.empty()) return {RealAlg::rat(Rational(0))};
    std::vector<RealAlg> samples;
    samples.push_back(RealAlg::rat(step_below(sorted_points.front())));
    for (size_t i = 0; i < sorted_points.size(); ++i) {
        samples.push_back(sorted_points[i]);
        if (i + 1 < sorted_points.size())
            samples.push_back(
                RealAlg::rat(rational_between(sorted_points[i], sorted_points[i + 1])));
    }
    samples.push_back(RealAlg::rat(step_above(sorted_points.back())));
    return samples;
}

}  // namespace

bool check_universal(const SCPtr& body, const std::vector<RealAlg>& points, CheckReport& report) {
    for (const RealAlg& p : points) {
        if (!is_well_formed(p)) {
            report.add("points well-formed", false, to_string(p) + " is not a valid isolation");
            return false;
        }
    }
    report.add("points well-formed", true, std::to_string(points.size()) + " point(s)");
    std::vector<RealAlg> sorted = sort_dedup(points);
    report.add("points canonicalized", true,
               std::to_string(sorted.size()) + " distinct point(s) after sorting");

    // Completeness: the points must cover every real root of every atom
    // polynomial — the zero-sign count has to match the full root count.
    bool complete = true;
    for (const Poly& p : collect_polys(body)) {
        int zeros = 0;
        for (const RealAlg& pt : sorted)
            if (sign_at(p, pt) == 0) ++zeros;
        int total = count_roots(p, ExtRat::neg_inf(), ExtRat::pos_inf());
        bool ok = zeros == total;
        complete = complete && ok;
        report.add("root coverage: " + to_string(p), ok,
                   std::to_string(zeros) + " of " + std::to_string(total) + " roots among points");
    }
    if (!complete) return false;

    // The points split the line into regions on which every atom polynomial
    // keeps one sign; checking one sample per region checks all of R.
    bool all_hold = true;
    for (const RealAlg& s : decomposition_samples(sorted)) {
        bool holds = eval_at(body, s);
        all_hold = all_hold && holds;
        report.add("body holds at " + to_string(s), holds);
    }
    return all_hold;
}

std::optional<Certificate> generate_certificate(const Formula& f) {
    SCPtr body = to_sign_form(f.body);
    std::vector<RealAlg> roots = isolate_all(collect_polys(body));
    if (f.quant == Quantifier::Forall)
        return Certificate{Certificate::Kind::Universal, std::move(roots)};
    for (const RealAlg& r : roots)
        if (eval_at(body, r)) return Certificate{Certificate::Kind::Existential, {r}};
    for (const RealAlg& s : decomposition_samples(roots))
        if (s.is_rational() && eval_at(body, s))
            return Certificate{Certificate::Kind::Existential, {s}};
    return std::nullopt;
}

bool check_certificate(const Formula& f, const Certificate& c, CheckReport& report) {
    Certificate::Kind expected = f.quant == Quantifier::Forall ? Certificate::Kind::Universal
                                                               : Certificate::Kind::Existential;
    if (c.kind != expected) {
        report.add("certificate kind matches quantifier", false,
                   f.quant == Quantifier::Forall ? "universal formula, existential certificate"
                                                 : "existential formula, universal certificate");
        return false;
    }
    SCPtr body = to_sign_form(f.body);
    if (c.kind == Certificate::Kind::Universal) return check_universal(body, c.points, report);
    if (c.points.size() != 1) {
        report.add("existential certificate has one witness", false,
                   std::to_string(c.points.size()) + " point(s)");
        return false;
    }
    return check_existential(body, c.points.front(), report);
}

Verdict decide(const Formula& f) {
    CheckReport direct;
    std::optional<Certificate> cert = generate_certificate(f);
    if (cert && check_certificate(f, *cert, direct))
        return Verdict{true, std::move(*cert), std::move(direct)};

    Formula dual = negate(f);
    CheckReport refutation;
    std::optional<Certificate> counter = generate_certificate(dual);
    if (counter && check_certificate(dual, *counter, refutation))
        return Verdict{false, std::move(*counter), std::move(refutation)};

    throw std::logic_error("decision inconsistency: neither the formula nor its negation "
                           "produced a checkable certificate");
}

Certificate resolve_kind(const ParsedCertificate& parsed, const Formula& f) {
    Certificate::Kind kind = parsed.kind.value_or(f.quant == Quantifier::Forall
                                                      ? Certificate::Kind::Universal
                                                      : Certificate::Kind::Existential);
    return Certificate{kind, parsed.points};
}

}  // namespace polycert
