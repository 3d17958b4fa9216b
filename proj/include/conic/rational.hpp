#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "conic/errors.hpp"

namespace conic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses "p", "-p" or "p/q" with decimal digits only; q must be nonzero.
inline Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("empty integer literal '" + std::string(text) + "'");
    for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError("malformed integer literal '" + std::string(text) + "'");
    }
    Integer value{std::string(digits)};
    return (text.front() == '-') ? Integer(-value) : value;
}

inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ParseError("signed denominator in '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

/// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms, q > 0).
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

}  // namespace conic
