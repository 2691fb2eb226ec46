#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maxmat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a symbolic operation would exceed the term budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact integer square root, or nullopt when n is not a perfect square.
inline std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

/// Exact square root of a nonnegative rational, or nullopt.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto num = int_sqrt_exact(numerator(r));
    if (!num) return std::nullopt;
    auto den = int_sqrt_exact(denominator(r));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

/// Renders "p" for integers, "p/q" otherwise (no decimals, exact round trip).
inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" with optional leading '-'. Rejects anything else.
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("invalid rational: '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (pos == s.size()) fail();
    bool seen_slash = false;
    std::size_t digits_before = 0, digits_after = 0;
    for (std::size_t i = pos; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (seen_slash || digits_before == 0) fail();
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            (seen_slash ? digits_after : digits_before)++;
        } else {
            fail();
        }
    }
    if (digits_before == 0 || (seen_slash && digits_after == 0)) fail();
    Rational r;
    try {
        r = Rational(std::string(s));
    } catch (const std::exception&) {
        fail();
    }
    return r;
}

}  // namespace maxmat
