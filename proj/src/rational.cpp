#include "superder/rational.hpp"

#include <stdexcept>

namespace superder {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    if (s.empty())
        throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
    Integer v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
        v = v * 10 + (c - '0');
    }
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s, s));
    const Integer num = parse_integer(s.substr(0, slash), s);
    const std::string_view den_part = s.substr(slash + 1);
    if (!den_part.empty() && den_part.front() == '-')
        throw std::invalid_argument("bad rational: signed denominator in '" +
                                    std::string(s) + "'");
    const Integer den = parse_integer(den_part, s);
    if (den == 0)
        throw std::invalid_argument("bad rational: zero denominator in '" +
                                    std::string(s) + "'");
    return Rational(num, den);
}

std::string rational_str(const Rational& r) {
    return r.str();
}

}  // namespace superder
