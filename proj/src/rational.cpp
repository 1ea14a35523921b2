#include "qnrnp/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace qnrnp {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::uint64_t parse_u64(const std::string& s) {
    if (!all_digits(s) || s.size() > 19) throw DomainError("rational: bad integer '" + s + "'");
    std::uint64_t v = 0;
    for (char c : s) v = v * 10 + static_cast<std::uint64_t>(c - '0');
    return v;
}

} // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError("rational: empty string");

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string a = text.substr(0, slash);
        const std::string b = text.substr(slash + 1);
        const std::uint64_t den = parse_u64(b);
        if (den == 0) throw DomainError("rational: zero denominator in '" + text + "'");
        return Rational(parse_u64(a), den);
    }

    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_u64(text), 1);

    const std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (!whole.empty() && !all_digits(whole)) throw DomainError("rational: bad decimal '" + text + "'");
    if (!all_digits(frac)) throw DomainError("rational: bad decimal '" + text + "'");

    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    if (frac.size() > 19) {
        throw DomainError("rational: decimal '" + text + "' does not fit in 64 bits, pass a fraction a/b");
    }

    // Cap significant digits so the value stays exact; longer decimals must
    // be passed as a fraction so no precision is lost silently.
    std::string digits = whole + frac;
    std::size_t lead = 0;
    while (lead + 1 < digits.size() && digits[lead] == '0') ++lead;
    if (digits.size() - lead > 12) {
        throw DomainError("rational: more than 12 significant digits in '" + text + "', pass an exact fraction a/b instead");
    }

    unsigned __int128 den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    unsigned __int128 num = whole.empty() ? 0 : parse_u64(whole);
    num *= den;
    std::uint64_t frac_value = 0;
    for (char c : frac) frac_value = frac_value * 10 + static_cast<std::uint64_t>(c - '0');
    num += frac_value;
    constexpr unsigned __int128 kMax = ~static_cast<std::uint64_t>(0);
    if (num > kMax || den > kMax) {
        throw DomainError("rational: decimal '" + text + "' does not fit in 64 bits, pass a fraction a/b");
    }
    return Rational(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

} // namespace qnrnp
