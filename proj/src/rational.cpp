#include "bm/rational.hpp"

#include <cctype>

namespace bm {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw ParseError("malformed rational: '" + text + "'");
    }
    BigInt p(num);
    BigInt q(den);
    if (q == 0) throw ParseError("zero denominator in rational: '" + text + "'");
    // The two-argument constructor canonicalizes (the string one does not).
    return Rational(p, q);
}

std::string rat_to_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace bm
