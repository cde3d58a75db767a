#pragma once

// Exact scalar arithmetic shared by every module: arbitrary-precision
// integers and rationals (boost::multiprecision), plus small helpers for
// factorials, binomials, powers and rational text I/O.
//
// No floating point is involved in any equality decision anywhere in the
// library; doubles appear only at the Monte Carlo / reporting boundary.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boxvol {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is a binomial coefficient after every step
    }
    return r;
}

// q^e with exact arithmetic, e >= 0.
inline Rational pow_rational(const Rational& q, unsigned e) {
    Rational r = 1;
    Rational base = q;
    while (e != 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e != 0) base *= base;
    }
    return r;
}

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

// Parses "p", "p/q" or an exact decimal such as "1.5" (= 3/2).
// No exponent notation; the conversion is always lossless.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) fail();

    std::string s(text);
    std::size_t pos = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        pos = 1;
    }
    auto digits_to_int = [&](std::size_t b, std::size_t e) -> BigInt {
        if (b == e) fail();
        for (std::size_t i = b; i < e; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        return BigInt(s.substr(b, e - b));
    };

    const std::size_t slash = s.find('/');
    const std::size_t dot = s.find('.');
    Rational out;
    if (slash != std::string::npos) {
        if (dot != std::string::npos) fail();
        BigInt num = digits_to_int(pos, slash);
        BigInt den = digits_to_int(slash + 1, s.size());
        if (den == 0) fail();
        out = Rational(num, den);
    } else if (dot != std::string::npos) {
        // "12.345" -> 12345 / 10^3; the integer part may be empty (".5").
        BigInt ipart = (dot == pos) ? BigInt(0) : digits_to_int(pos, dot);
        BigInt fpart = digits_to_int(dot + 1, s.size());
        BigInt den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        out = Rational(ipart * den + fpart, den);
    } else {
        out = Rational(digits_to_int(pos, s.size()));
    }
    return negative ? Rational(-out) : out;
}

}  // namespace boxvol
