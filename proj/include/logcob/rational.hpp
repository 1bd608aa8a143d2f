#pragma once

// Exact arithmetic layer: arbitrary-precision integers and rationals.
// Every numeric value in the library flows through these types; there is no
// floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "logcob/error.hpp"

namespace logcob {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q; // canonical "p/q", denominator omitted when 1, sign on numerator
    return os.str();
}

// Accepts "p", "-p", "p/q" with arbitrary-precision components.
inline Rational rational_from_string(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&]() -> Rational {
        raise(errc::parse_error, "chowring", "bad rational literal '" + text + "'");
    };
    if (text.empty()) return fail();
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    if (digits == 0) return fail();
    Integer num(text.substr(0, i));
    if (i == text.size()) return Rational(num);
    if (text[i] != '/') return fail();
    ++i;
    pos = i;
    digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    if (digits == 0 || i != text.size()) return fail();
    Integer den(text.substr(pos));
    if (den == 0) return fail();
    return Rational(num, den);
}

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        r *= Integer(n - k + j);
        r /= Integer(j);
    }
    return r;
}

} // namespace logcob
