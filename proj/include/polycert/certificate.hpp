#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycert/realalg.hpp"

namespace polycert {

// A checkable witness object: one satisfying point for an existential claim,
// or the complete ascending root list that grounds a universal one.
struct Certificate {
    enum class Kind { Existential, Universal };
    Kind kind;
    std::vector<RealAlg> points;
};

// What a certificate file yields before it meets a formula: the bracketed
// point-list syntax carries no kind marker, so kind may still be open.
struct ParsedCertificate {
    std::optional<Certificate::Kind> kind;
    std::vector<RealAlg> points;
};

// One point in certificate-entry syntax: "Rat 2", "Rat -3", or
// "Arep [:-2, 0, 1:] (-2) (- 1/3)" — negatives bare or parenthesized,
// rationals as integers, n/d, or exact decimals. Throws
// std::invalid_argument on malformed input. Syntactically valid interval
// representations are returned unchecked; consumers decide validity.
RealAlg parse_point(const std::string& text);

// Accepts either a bracketed point list "[Arep [:-2,0,1:] 0 2, Rat 1]" or a
// JSON object {"kind": "universal"|"existential", "points": [...]} whose
// points are {"type":"rat","value":"2"} or
// {"type":"arep","poly":["-2","0","1"],"lb":"-2","ub":"-1/3"} with numbers
// as exact strings. Throws std::invalid_argument on malformed input.
ParsedCertificate parse_certificate(const std::string& text);

nlohmann::ordered_json point_to_json(const RealAlg& a);
nlohmann::ordered_json certificate_to_json(const Certificate& c);

}  // namespace polycert
