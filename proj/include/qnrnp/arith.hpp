#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qnrnp/errors.hpp"

namespace qnrnp::arith {

// Prime factorization of n >= 1. Factors are (prime, exponent) pairs with
// primes strictly ascending; n == 1 has an empty factor list.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;

    int omega() const { return static_cast<int>(factors.size()); }
    bool squarefree() const;

    // All divisors of n, ascending. Intended for the desk-scale moduli this
    // library works with; the count is d(n).
    std::vector<std::uint64_t> divisors() const;
};

// Smallest-prime-factor sieve over [0, limit]. spf(1) == 1, spf(0) == 0.
class SpfSieve {
public:
    explicit SpfSieve(std::uint32_t limit);
    std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
    std::uint32_t spf(std::uint32_t k) const { return spf_[k]; }

private:
    std::vector<std::uint32_t> spf_;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// (a * b) mod m without overflow, any m < 2^64.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// base^exp mod m, m >= 1. mod_pow(x, 0, m) == 1 % m.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse of a mod m in [0, m). Throws NotInvertibleError if gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, correct for all 64-bit n.
bool is_prime(std::uint64_t n);

// Factors n >= 1 by trial division below 2^16, then Pollard rho with
// Miller-Rabin certification for what remains. Throws DomainError on n == 0.
Factorization factorize(std::uint64_t n);

// Sieve-backed variant; requires n <= sieve.limit().
Factorization factorize(std::uint64_t n, const SpfSieve& sieve);

std::uint64_t euler_phi(const Factorization& f);
std::uint64_t euler_phi(std::uint64_t n);

// Moebius mu: 0 if any exponent >= 2, else (-1)^omega.
int mobius(const Factorization& f);
int mobius(std::uint64_t n);

// Sum of mu(d) over all divisors d of n, computed by actually summing
// (the identity says it is 1 for n == 1 and 0 otherwise).
std::int64_t mobius_divisor_sum(std::uint64_t n);

// Number of squarefree divisors of n, computed as sum |mu(d)| over divisors
// (equals 2^omega(n)).
std::uint64_t squarefree_divisor_count(std::uint64_t n);

// Checks omega(p-1) <= 1.385 * ln(p) / ln(ln(p)) for a prime p >= 5.
// `holds` is reported false only when the violation exceeds a 1e-9 relative
// slack, so boundary noise cannot flip a true bound.
struct OmegaBoundCheck {
    int omega = 0;
    double bound = 0.0;
    bool holds = false;
};
OmegaBoundCheck omega_bound_check(std::uint64_t p);

// All primes in [lo, hi], ascending. Memory is one bit per odd number up to
// hi, so ranges to ~10^8 are fine; DomainError beyond 2^32 (use is_prime
// point queries instead at that scale).
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

} // namespace qnrnp::arith
