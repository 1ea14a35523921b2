#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "qnrnp/errors.hpp"

namespace qnrnp {

// Exact non-negative rational. Hypothesis boundaries (phi/(p-1) <= 1/2 - eps)
// are compared with cross-multiplication in 128-bit, never through doubles.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        const std::uint64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<unsigned __int128>(a.num) * b.den < static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Parses "a/b" or a decimal with at most 12 significant digits into an exact
// rational. Anything else (including longer decimals, which would silently
// lose exactness) is a DomainError.
Rational parse_rational(const std::string& text);

} // namespace qnrnp
