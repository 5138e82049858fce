#include "confhom/rational.hpp"

#include "confhom/errors.hpp"

#include <cctype>

namespace confhom {

namespace {

bool is_decimal_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_decimal_integer(num))
        throw parse_error("coefficient is not a rational literal: '" + text + "'");
    if (slash == std::string::npos) {
        Rational r{Integer(num), Integer(1)};
        r.canonicalize();
        return r;
    }
    const std::string den = text.substr(slash + 1);
    if (!is_decimal_integer(den) || Integer(den) == 0)
        throw parse_error("coefficient is not a rational literal: '" + text + "'");
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace confhom
