#pragma once

// Deliberately naive reference implementations. Tests compare the library
// against these, never the other way around, so keep them dumb and obvious.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::uint64_t phi(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

inline int mobius(std::uint64_t n) {
    int omega = 0;
    for (const auto& [p, e] : factor(n)) {
        if (e > 1) return 0;
        ++omega;
    }
    return omega % 2 == 0 ? 1 : -1;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 acc = 1;
    unsigned __int128 base = a % m;
    while (e > 0) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t order(std::uint64_t a, std::uint64_t p) {
    std::uint64_t v = a % p;
    std::uint64_t t = 1;
    while (v != 1) { v = v * (a % p) % p; ++t; }
    return t;
}

inline bool is_square_mod(std::uint64_t a, std::uint64_t p) {
    for (std::uint64_t b = 1; b < p; ++b)
        if (b * b % p == a % p) return true;
    return false;
}

// 0 = quadratic residue, 1 = primitive root, 2 = neither.
inline int unit_class(std::uint64_t p, std::uint64_t a) {
    if (is_square_mod(a, p)) return 0;
    if (order(a, p) == p - 1) return 1;
    return 2;
}

inline std::complex<double> ramanujan(std::uint64_t n, std::uint64_t ell) {
    std::complex<double> acc{0.0, 0.0};
    const double tau = 6.283185307179586476925286766559;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        double arg = tau * static_cast<double>(k % n) * static_cast<double>(ell % n) /
                     static_cast<double>(n);
        acc += std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

} // namespace oracle
