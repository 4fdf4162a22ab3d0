#include "freefield/rational.hpp"

#include <cctype>

namespace freefield {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal", 0);
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& s, std::size_t offset) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) throw ParseError("malformed integer literal", offset);
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("malformed integer literal", offset + i);
    };
    if (slash == std::string::npos) {
        check_int(text, 0);
        return make_rational(Integer(text), Integer(1));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num, 0);
    check_int(den, slash + 1);
    return make_rational(Integer(num), Integer(den));
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace freefield
