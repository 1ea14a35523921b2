#include "qnrnp/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qnrnp::arith {

bool Factorization::squarefree() const {
    for (const auto& [p, e] : factors)
        if (e >= 2) return false;
    return true;
}

std::vector<std::uint64_t> Factorization::divisors() const {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

SpfSieve::SpfSieve(std::uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0) {
    if (limit >= 1) spf_[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 0) throw DomainError("mod_pow: modulus must be >= 1");
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 0) throw DomainError("mod_inverse: modulus must be >= 1");
    // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = m, new_r = a % m;
    while (new_r != 0) {
        const std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw NotInvertibleError("mod_inverse: argument not coprime to modulus");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(m)) : static_cast<std::uint64_t>(t);
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
    a %= n;
    if (a == 0) return false; // base shares a factor view; not a witness
    std::uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true; // composite witnessed
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is deterministic for every n < 2^64.
    for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL})
        if (miller_rabin_witness(n, a, d, r)) return false;
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    // Brent's cycle-finding variant with batched gcds. The deterministic
    // parameter sweep keeps factorizations reproducible run to run.
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        std::uint64_t y = 2, g = 1, q = 1, x = 0, ys = 0;
        const std::uint64_t m = 128;
        for (std::uint64_t r = 1; g == 1; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                const std::uint64_t steps = std::min(m, r - k);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            // The batch jumped past the factor; redo the last block stepwise.
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
        // Degenerate cycle for this c; try the next increment.
    }
}

void factor_recursive(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_recursive(d, primes);
    factor_recursive(n / d, primes);
}

Factorization from_prime_list(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    std::sort(primes.begin(), primes.end());
    Factorization f;
    f.n = n;
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.emplace_back(primes[i], static_cast<int>(j - i));
        i = j;
    }
    return f;
}

} // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be >= 1");
    const std::uint64_t original = n;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < (1ULL << 16) && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        if (n < (1ULL << 32) || is_prime(n))
            primes.push_back(n);
        else
            factor_recursive(n, primes);
    }
    return from_prime_list(original, primes);
}

Factorization factorize(std::uint64_t n, const SpfSieve& sieve) {
    if (n == 0) throw DomainError("factorize: n must be >= 1");
    if (n > sieve.limit()) throw DomainError("factorize: n exceeds sieve limit");
    const std::uint64_t original = n;
    Factorization f;
    f.n = original;
    auto k = static_cast<std::uint32_t>(n);
    while (k > 1) {
        const std::uint32_t p = sieve.spf(k);
        int e = 0;
        while (k % p == 0) {
            k /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

std::uint64_t euler_phi(const Factorization& f) {
    std::uint64_t phi = f.n;
    for (const auto& [p, e] : f.factors) phi = phi / p * (p - 1);
    return phi;
}

std::uint64_t euler_phi(std::uint64_t n) {
    return euler_phi(factorize(n));
}

int mobius(const Factorization& f) {
    if (!f.squarefree()) return 0;
    return (f.omega() % 2 == 0) ? 1 : -1;
}

int mobius(std::uint64_t n) {
    return mobius(factorize(n));
}

std::int64_t mobius_divisor_sum(std::uint64_t n) {
    const Factorization f = factorize(n);
    std::int64_t sum = 0;
    for (std::uint64_t d : f.divisors()) sum += mobius(factorize(d));
    return sum;
}

std::uint64_t squarefree_divisor_count(std::uint64_t n) {
    const Factorization f = factorize(n);
    std::uint64_t count = 0;
    for (std::uint64_t d : f.divisors())
        if (mobius(factorize(d)) != 0) ++count;
    return count;
}

OmegaBoundCheck omega_bound_check(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw DomainError("omega_bound_check: p must be a prime >= 5");
    OmegaBoundCheck check;
    check.omega = factorize(p - 1).omega();
    const double lp = std::log(static_cast<double>(p));
    check.bound = 1.385 * lp / std::log(lp);
    check.holds = static_cast<double>(check.omega) <= check.bound * (1.0 + 1e-9);
    return check;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    if (hi > (std::uint64_t{1} << 32)) throw DomainError("primes_in_range: hi exceeds 2^32");
    std::vector<std::uint64_t> out;
    if (hi < 2 || hi < lo) return out;
    if (lo <= 2) out.push_back(2);

    // One bit per odd value 3, 5, ..., slot i <-> 2i + 3.
    const std::uint64_t slots = hi < 3 ? 0 : (hi - 3) / 2 + 1;
    std::vector<bool> composite(slots, false);
    for (std::uint64_t i = 0; i < slots; ++i) {
        if (composite[i]) continue;
        const std::uint64_t v = 2 * i + 3;
        if (v * v > hi) break;
        for (std::uint64_t j = (v * v - 3) / 2; j < slots; j += v) composite[j] = true;
    }
    for (std::uint64_t i = 0; i < slots; ++i) {
        const std::uint64_t v = 2 * i + 3;
        if (!composite[i] && v >= lo) out.push_back(v);
    }
    return out;
}

} // namespace qnrnp::arith
