#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycert/certificate.hpp"
#include "polycert/formula.hpp"

namespace polycert {

// One verification step and its outcome; checkers append these as they go so
// a rejection pinpoints the failing step.
struct CheckEntry {
    std::string name;
    bool passed;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckEntry> entries;
    void add(std::string name, bool passed, std::string detail = "") {
        entries.push_back({std::move(name), passed, std::move(detail)});
    }
};

struct Verdict {
    bool truth;
    // Certifies the formula itself when truth holds, its negation otherwise.
    Certificate cert;
    CheckReport report;
};

// True iff the witness is well-formed and satisfies the body. Malformed
// witnesses are reported and rejected, never thrown.
bool check_existential(const SCPtr& body, const RealAlg& witness, CheckReport& report);

// Full universal check: points are canonically sorted and deduplicated, then
// (a) well-formedness, (b) per-polynomial root-count completeness,
// (c) sample construction interleaving rationals around and between the
// points ({0} when there are none), (d) body evaluation at every sample.
bool check_universal(const SCPtr& body, const std::vector<RealAlg>& points, CheckReport& report);

// Search half, untrusted by design. Universal formulas always yield the root
// list of their body's polynomials; existential ones yield the first sample
// point satisfying the body (roots in ascending order, then the interleaved
// rationals), or nullopt when none does — the caller then certifies the
// negation.
std::optional<Certificate> generate_certificate(const Formula& f);

// Replay a certificate against a formula: kind must match the quantifier and
// the corresponding checker must accept.
bool check_certificate(const Formula& f, const Certificate& c, CheckReport& report);

// Decide truth: certify f, falling back to certifying its negation. Throws
// std::logic_error if neither side certifies (an implementation bug).
Verdict decide(const Formula& f);

// Give a parsed certificate its kind: bare point lists adopt the quantifier
// of the formula they are checked against.
Certificate resolve_kind(const ParsedCertificate& parsed, const Formula& f);

}  // namespace polycert
