#ifndef LND_RATIONAL_HPP
#define LND_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "lnd/errors.hpp"

namespace lnd {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats q as "num/den" with den > 0, e.g. "-2/1". The denominator is
/// always printed so serialized coefficients are unambiguous.
inline std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "num/den" (or a bare integer). Throws ParseError on malformed
/// input or a zero denominator.
inline Rational rational_from_string(std::string_view s) {
    if (s.empty())
        throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Integer(std::string(s)));
        Integer num{std::string(s.substr(0, slash))};
        Integer den{std::string(s.substr(slash + 1))};
        if (den == 0)
            throw ParseError("zero denominator in rational literal '" + std::string(s) + "'");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational literal '" + std::string(s) + "': " + e.what());
    }
}

} // namespace lnd

#endif
