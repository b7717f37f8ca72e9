#include "parabose/rational.hpp"

#include <cctype>

namespace parabose {

namespace {

bool is_integer_literal(const std::string &s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string &s) {
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

} // namespace

Rational parse_rational(const std::string &text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational of the form p/q: '" + text + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_integer(num), d);
}

std::string to_string(const Rational &r) {
    if (is_integer(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

long to_long(const Rational &r) {
    if (!is_integer(r)) throw DomainError("expected an integer, got " + to_string(r));
    return boost::multiprecision::numerator(r).convert_to<long>();
}

} // namespace parabose
