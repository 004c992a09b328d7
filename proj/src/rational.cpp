#include "polycert/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace polycert {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
        s = trim(s);
    }
    if (s.empty()) throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");

    Rational r;
    if (size_t slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        // Base 10 always: the default base auto-detection would read a
        // leading zero as octal.
        mpz_class d{std::string(den), 10};
        if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
        r = Rational(mpz_class{std::string(num), 10}, d);
        r.canonicalize();
    } else if (size_t dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ipart = s.substr(0, dot);
        std::string_view fpart = s.substr(dot + 1);
        if (!all_digits(ipart) || !all_digits(fpart))
            throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
        mpz_class num{std::string(ipart) + std::string(fpart), 10};
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fpart.size());
        r = Rational(num, den);
        r.canonicalize();
    } else {
        if (!all_digits(s))
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        r = Rational(mpz_class{std::string(s), 10});
    }
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace polycert
