#include "polycert/certificate.hpp"

#include <cctype>
#include <stdexcept>

namespace polycert {

namespace {

// Hand-rolled cursor for the bracketed point-list syntax.
class Cursor {
public:
    explicit Cursor(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(what);
    }

    bool eat_word(const char* word) {
        skip_ws();
        size_t len = std::char_traits<char>::length(word);
        if (s_.compare(i_, len, word) != 0) return false;
        size_t after = i_ + len;
        if (after < s_.size() && std::isalnum(static_cast<unsigned char>(s_[after]))) return false;
        i_ = after;
        return true;
    }

    Rational rational() {
        skip_ws();
        if (eat('(')) {
            size_t close = s_.find(')', i_);
            if (close == std::string::npos) fail("expected ')'");
            std::string inner = s_.substr(i_, close - i_);
            i_ = close + 1;
            return rational_from_string(inner);
        }
        std::string text;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
            text += s_[i_++];
            skip_ws();
        }
        size_t start = i_;
        while (i_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/' || s_[i_] == '.'))
            ++i_;
        if (start == i_) fail("expected a rational");
        text += s_.substr(start, i_ - start);
        return rational_from_string(text);
    }

    RealAlg point() {
        if (eat_word("Rat")) return RealAlg::rat(rational());
        if (eat_word("Arep")) {
            expect('[', "expected '[:' to open the coefficient list");
            expect(':', "expected '[:' to open the coefficient list");
            std::vector<Rational> coeffs;
            coeffs.push_back(rational());
            while (eat(',')) coeffs.push_back(rational());
            expect(':', "expected ':]' to close the coefficient list");
            expect(']', "expected ':]' to close the coefficient list");
            Rational lb = rational();
            Rational ub = rational();
            return RealAlg::alg(Poly(std::move(coeffs)), std::move(lb), std::move(ub));
        }
        fail("expected 'Rat' or 'Arep'");
    }

    void expect_end() {
        skip_ws();
        if (i_ < s_.size()) fail("unexpected trailing input");
    }

    bool at(char c) {
        skip_ws();
        return i_ < s_.size() && s_[i_] == c;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("certificate syntax: " + what + " at offset " +
                                    std::to_string(i_));
    }

private:
    const std::string& s_;
    size_t i_ = 0;
};

Rational json_rational(const nlohmann::json& v, const char* what) {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    throw std::invalid_argument(std::string("certificate JSON: ") + what +
                                " must be an exact numeric string");
}

RealAlg json_point(const nlohmann::json& v) {
    if (!v.is_object() || !v.contains("type") || !v["type"].is_string())
        throw std::invalid_argument("certificate JSON: each point needs a \"type\"");
    std::string type = v["type"].get<std::string>();
    if (type == "rat") {
        if (!v.contains("value"))
            throw std::invalid_argument("certificate JSON: rat point needs \"value\"");
        return RealAlg::rat(json_rational(v["value"], "value"));
    }
    if (type == "arep") {
        if (!v.contains("poly") || !v["poly"].is_array() || !v.contains("lb") || !v.contains("ub"))
            throw std::invalid_argument(
                "certificate JSON: arep point needs \"poly\", \"lb\", \"ub\"");
        std::vector<Rational> coeffs;
        for (const auto& c : v["poly"]) coeffs.push_back(json_rational(c, "poly coefficient"));
        return RealAlg::alg(Poly(std::move(coeffs)), json_rational(v["lb"], "lb"),
                            json_rational(v["ub"], "ub"));
    }
    throw std::invalid_argument("certificate JSON: point type must be \"rat\" or \"arep\"");
}

ParsedCertificate parse_json_certificate(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("points") ||
        !doc["points"].is_array())
        throw std::invalid_argument("certificate JSON: need {\"kind\": ..., \"points\": [...]}");
    ParsedCertificate out;
    std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
    if (kind == "universal") {
        out.kind = Certificate::Kind::Universal;
    } else if (kind == "existential") {
        out.kind = Certificate::Kind::Existential;
    } else {
        throw std::invalid_argument(
            "certificate JSON: \"kind\" must be \"universal\" or \"existential\"");
    }
    for (const auto& v : doc["points"]) out.points.push_back(json_point(v));
    return out;
}

}  // namespace

RealAlg parse_point(const std::string& text) {
    Cursor c(text);
    RealAlg p = c.point();
    c.expect_end();
    return p;
}

ParsedCertificate parse_certificate(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw std::invalid_argument("certificate syntax: empty input");
    if (text[first] == '{') return parse_json_certificate(text);

    Cursor c(text);
    c.expect('[', "expected '[' to open the point list");
    ParsedCertificate out;
    if (!c.eat(']')) {
        out.points.push_back(c.point());
        while (c.eat(',')) out.points.push_back(c.point());
        c.expect(']', "expected ']' to close the point list");
    }
    c.expect_end();
    return out;
}

nlohmann::ordered_json point_to_json(const RealAlg& a) {
    nlohmann::ordered_json j;
    if (a.is_rational()) {
        j["type"] = "rat";
        j["value"] = to_string(a.rational_value());
        return j;
    }
    j["type"] = "arep";
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    const Poly& p = a.ipoly();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(to_string(p.coeff(i)));
    j["poly"] = std::move(coeffs);
    j["lb"] = to_string(a.lb());
    j["ub"] = to_string(a.ub());
    return j;
}

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["kind"] = c.kind == Certificate::Kind::Universal ? "universal" : "existential";
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const RealAlg& a : c.points) points.push_back(point_to_json(a));
    j["points"] = std::move(points);
    return j;
}

}  // namespace polycert
