#include "lpa/rational.hpp"

#include "lpa/errors.hpp"

namespace lpa {

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw ParseError("bad rational literal '" + std::string(text) + "'");
        return Rational(Integer{std::string(text)});
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-')
        throw ParseError("bad rational literal '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(Integer{std::string(num)}, d);
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace lpa
