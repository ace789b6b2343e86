#include "wl/rational.hpp"

#include <cstdlib>

namespace wl {

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto to_ll = [&](std::string_view part) {
        std::string s(part);
        char* end = nullptr;
        const long long v = std::strtoll(s.c_str(), &end, 10);
        if (end == s.c_str() || *end != '\0')
            throw std::invalid_argument("parse_rational: malformed '" + std::string(text) + "'");
        return v;
    };
    if (slash == std::string_view::npos) return Rational(to_ll(text));
    return Rational(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
}

}  // namespace wl
