#include "lvmb/rational.hpp"

#include <cctype>

namespace lvmb {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int floor_rational(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) throw ParseError("malformed rational: '" + text + "'");
        return Rational(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("malformed rational: '" + text + "'");
    Int d(den);
    if (d == 0) throw ParseError("zero denominator in rational: '" + text + "'");
    return Rational(Int(num), d);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Int& n) { return n.str(); }

} // namespace lvmb
