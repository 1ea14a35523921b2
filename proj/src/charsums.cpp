#include "qnrnp/charsums.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace qnrnp::charsums {

using arith::Factorization;

namespace {

constexpr std::uint64_t kRootTableCap = 2'000'000;

// eta^k for k in [0, n-1], eta = exp(2*pi*i/n).
std::vector<std::complex<double>> root_powers(std::uint64_t n) {
    std::vector<std::complex<double>> pow(n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::uint64_t k = 0; k < n; ++k)
        pow[k] = std::polar(1.0, step * static_cast<double>(k));
    return pow;
}

std::complex<double> root_power(std::uint64_t n, std::uint64_t k) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    return std::polar(1.0, step * static_cast<double>(k % n));
}

void require_even(std::uint64_t n, const char* who) {
    if (n < 2 || n % 2 != 0) throw DomainError(std::string(who) + ": n must be even and >= 2");
}

} // namespace

double ComplexSum::modulus() const {
    return std::hypot(re, im);
}

std::int64_t ComplexSum::round_to_int() const {
    const double rounded = std::nearbyint(re);
    if (std::abs(re - rounded) > abs_error_budget || std::abs(im) > abs_error_budget)
        throw PrecisionError("complex sum does not round to an integer within budget");
    return static_cast<std::int64_t>(rounded);
}

double sum_budget(std::uint64_t n) {
    return std::max(1e-6, static_cast<double>(n) * std::ldexp(1.0, -40));
}

RamanujanValue ramanujan_sum(std::uint64_t n, std::int64_t ell) {
    if (n == 0) throw DomainError("ramanujan_sum: n must be >= 1");
    const std::int64_t sn = static_cast<std::int64_t>(n);
    std::int64_t r = ell % sn;
    if (r < 0) r += sn;
    const Factorization f = arith::factorize(n);
    const std::uint64_t d = std::gcd(static_cast<std::uint64_t>(r), n);
    return RamanujanValue{n, static_cast<std::uint64_t>(r), ramanujan_value(f, d)};
}

std::int64_t ramanujan_value(const Factorization& m, std::uint64_t gcd_km) {
    // c_m(k) = mu(m/d) phi(m) / phi(m/d) with d = gcd(k, m); multiplicative,
    // so accumulate per prime power of m against the prime's share of d.
    std::int64_t value = 1;
    for (const auto& [p, e] : m.factors) {
        int vd = 0;
        for (std::uint64_t t = gcd_km; t % p == 0; t /= p) ++vd;
        // Factor contribution for p^e in m, p^vd in d:
        //   vd >= e     : phi(p^e)
        //   vd == e - 1 : -p^{e-1}
        //   vd <  e - 1 : 0
        if (vd >= e) {
            std::uint64_t pe = 1;
            for (int i = 1; i < e; ++i) pe *= p;
            value *= static_cast<std::int64_t>(pe * (p - 1));
        } else if (vd == e - 1) {
            std::uint64_t pe = 1;
            for (int i = 1; i < e; ++i) pe *= p;
            value *= -static_cast<std::int64_t>(pe);
        } else {
            return 0;
        }
    }
    return value;
}

BetaValue beta_sum(std::uint64_t n, std::uint64_t ell) {
    require_even(n, "beta_sum");
    if (ell >= n) throw DomainError("beta_sum: ell must lie in [0, n-1]");
    const std::int64_t half = static_cast<std::int64_t>(n / 2);
    const std::int64_t phi = static_cast<std::int64_t>(arith::euler_phi(n));
    if (ell == 0) return BetaValue{n, ell, half - phi};
    if (ell * 2 == n) return BetaValue{n, ell, phi - half};
    return BetaValue{n, ell, -ramanujan_sum(n, static_cast<std::int64_t>(ell)).value};
}

ComplexSum ramanujan_sum_direct(std::uint64_t n, std::int64_t ell) {
    if (n == 0) throw DomainError("ramanujan_sum_direct: n must be >= 1");
    const std::int64_t sn = static_cast<std::int64_t>(n);
    std::int64_t r = ell % sn;
    if (r < 0) r += sn;
    const std::uint64_t l = static_cast<std::uint64_t>(r);
    ComplexSum s{0.0, 0.0, sum_budget(n)};
    const bool use_table = n <= kRootTableCap;
    const auto table = use_table ? root_powers(n) : std::vector<std::complex<double>>{};
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (std::gcd(i, n) != 1) continue;
        const std::uint64_t k = (i % n) * l % n;
        const auto z = use_table ? table[k] : root_power(n, k);
        s.re += z.real();
        s.im += z.imag();
    }
    return s;
}

ComplexSum beta_sum_direct(std::uint64_t n, std::uint64_t ell) {
    require_even(n, "beta_sum_direct");
    if (ell >= n) throw DomainError("beta_sum_direct: ell must lie in [0, n-1]");
    ComplexSum s{0.0, 0.0, sum_budget(n)};
    const bool use_table = n <= kRootTableCap;
    const auto table = use_table ? root_powers(n) : std::vector<std::complex<double>>{};
    for (std::uint64_t i = 1; i <= n; i += 2) {
        if (std::gcd(i, n) == 1) continue;
        const std::uint64_t k = i * ell % n;
        const auto z = use_table ? table[k] : root_power(n, k);
        s.re += z.real();
        s.im += z.imag();
    }
    return s;
}

Lemma21Report verify_lemma21(std::uint64_t n) {
    require_even(n, "verify_lemma21");
    Lemma21Report report;
    report.n = n;
    report.stated_identity_holds = true;
    report.beta_matches_direct = true;
    const double budget = sum_budget(n);

    // The summation index set (odd i with gcd(i, n) > 1) and the root table
    // are shared by every ell; hoist both so the sweep is O(n * |set|).
    const arith::Factorization fn = arith::factorize(n);
    const auto table = n <= kRootTableCap ? root_powers(n) : std::vector<std::complex<double>>{};
    const bool use_table = !table.empty();
    std::vector<std::uint64_t> indices;
    for (std::uint64_t i = 1; i <= n; i += 2)
        if (std::gcd(i, n) != 1) indices.push_back(i);

    for (std::uint64_t ell = 1; ell < n; ++ell) {
        ComplexSum direct{0.0, 0.0, budget};
        for (std::uint64_t i : indices) {
            const std::uint64_t k = i * ell % n;
            const auto z = use_table ? table[k] : root_power(n, k);
            direct.re += z.real();
            direct.im += z.imag();
        }
        const auto neg_alpha = static_cast<double>(-ramanujan_value(fn, std::gcd(ell, n)));
        const double err = std::hypot(direct.re - neg_alpha, direct.im);
        if (err > budget) {
            report.stated_identity_holds = false;
            report.exception_ells.push_back(ell);
            report.max_exception_error = std::max(report.max_exception_error, err);
        }
        const auto produced = static_cast<double>(beta_sum(n, ell).value);
        if (std::hypot(direct.re - produced, direct.im) > budget)
            report.beta_matches_direct = false;
    }
    return report;
}

std::int64_t characteristic_value(const residues::IndexTable& table, const residues::UnitResidue& x) {
    const std::uint64_t p = table.p;
    if (x.p != p) throw DomainError("characteristic_value: mismatched prime");
    const std::uint64_t n = p - 1;
    const Factorization fn = arith::factorize(n);
    const std::uint64_t phi = arith::euler_phi(fn);

    // beta_ell depends only on gcd(ell, n); precompute one value per divisor.
    // gcd(ell, n) = n happens exactly at ell = 0, and = n/2 exactly at n/2.
    const auto divs = fn.divisors();
    std::vector<std::int64_t> beta_by_div(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i) {
        const std::uint64_t d = divs[i];
        if (d == n)
            beta_by_div[i] = static_cast<std::int64_t>(n / 2) - static_cast<std::int64_t>(phi);
        else if (d * 2 == n)
            beta_by_div[i] = static_cast<std::int64_t>(phi) - static_cast<std::int64_t>(n / 2);
        else
            beta_by_div[i] = -ramanujan_value(fn, d);
    }

    const bool use_table = n <= kRootTableCap;
    const auto roots = use_table ? root_powers(n) : std::vector<std::complex<double>>{};
    const std::uint64_t step = table.ind(x.value);
    ComplexSum s{0.0, 0.0, sum_budget(n)};
    std::uint64_t k = 0; // (ell * ind) mod n, advanced incrementally
    for (std::uint64_t ell = 0; ell < n; ++ell) {
        const std::uint64_t d = std::gcd(ell, n);
        const auto it = std::lower_bound(divs.begin(), divs.end(), d);
        const auto beta = static_cast<double>(beta_by_div[static_cast<std::size_t>(it - divs.begin())]);
        const auto z = use_table ? roots[k] : root_power(n, k);
        s.re += beta * z.real();
        s.im += beta * z.imag();
        k += step;
        if (k >= n) k -= n;
    }
    return s.round_to_int();
}

ComplexSum interval_character_sum(const residues::IndexTable& table, std::uint64_t ell,
                                  std::uint64_t M, std::uint64_t N) {
    const std::uint64_t p = table.p;
    const std::uint64_t n = p - 1;
    if (M > N || N > p - 1) throw DomainError("interval_character_sum: need 0 <= M <= N <= p-1");
    if (ell % n == 0) throw DomainError("interval_character_sum: principal character excluded");
    const std::uint64_t l = ell % n;
    ComplexSum s{0.0, 0.0, sum_budget(n)};
    const bool use_table = n <= kRootTableCap;
    const auto roots = use_table ? root_powers(n) : std::vector<std::complex<double>>{};
    for (std::uint64_t m = std::max<std::uint64_t>(M, 1); m <= N; ++m) {
        const std::uint64_t k = l * table.ind(m) % n;
        const auto z = use_table ? roots[k] : root_power(n, k);
        s.re += z.real();
        s.im += z.imag();
    }
    return s;
}

ComplexSum coprime_restricted_sum(const residues::IndexTable& table, std::uint64_t ell, std::uint64_t q) {
    const std::uint64_t p = table.p;
    const std::uint64_t n = p - 1;
    if (q == 0 || n % q != 0) throw DomainError("coprime_restricted_sum: q must divide p-1");
    const std::uint64_t l = ell % n;
    const std::uint64_t nq = n / q;
    const bool use_table = n <= kRootTableCap;
    const auto roots = use_table ? root_powers(n) : std::vector<std::complex<double>>{};
    auto chi = [&](std::uint64_t m) {
        const std::uint64_t k = l * table.ind(m) % n;
        return use_table ? roots[k] : root_power(n, k);
    };

    ComplexSum direct{0.0, 0.0, sum_budget(n)};
    for (std::uint64_t m = 1; m < p; ++m) {
        if (std::gcd(m, nq) != 1) continue;
        const auto z = chi(m);
        direct.re += z.real();
        direct.im += z.imag();
    }

    // Moebius expansion over the squarefree divisors of (p-1)/q.
    std::complex<double> expanded = 0.0;
    for (std::uint64_t d : arith::factorize(nq).divisors()) {
        const int mu = arith::mobius(arith::factorize(d));
        if (mu == 0) continue;
        std::complex<double> inner = 0.0;
        for (std::uint64_t t = 1; t <= n / d; ++t) inner += chi(t);
        expanded += static_cast<double>(mu) * chi(d % p) * inner;
    }

    if (std::hypot(direct.re - expanded.real(), direct.im - expanded.imag()) > direct.abs_error_budget)
        throw PrecisionError("coprime_restricted_sum: direct and Moebius-expanded routes disagree");
    return direct;
}

namespace {

AlphaAbsSums assemble_alpha_sums(std::uint64_t n, std::int64_t excluding_zero, std::int64_t full_period) {
    const Factorization f = arith::factorize(n);
    AlphaAbsSums sums;
    sums.n = n;
    sums.sum_excluding_zero = excluding_zero;
    sums.sum_full_period = full_period;
    sums.rhs = static_cast<std::int64_t>((1ULL << f.omega()) * arith::euler_phi(f));
    sums.excluding_zero_matches = sums.sum_excluding_zero == sums.rhs;
    sums.full_period_matches = sums.sum_full_period == sums.rhs;
    return sums;
}

} // namespace

AlphaAbsSums alpha_abs_sum_identity(std::uint64_t n) {
    if (n == 0) throw DomainError("alpha_abs_sum_identity: n must be >= 1");
    const Factorization f = arith::factorize(n);
    // Group ell in [0, n-1] by d = gcd(ell, n): phi(n/d) values per class.
    std::int64_t full = 0;
    for (std::uint64_t d : f.divisors()) {
        const std::int64_t cd = ramanujan_value(f, d);
        full += static_cast<std::int64_t>(arith::euler_phi(n / d)) * std::abs(cd);
    }
    const auto phi = static_cast<std::int64_t>(arith::euler_phi(f));
    return assemble_alpha_sums(n, full - phi, full);
}

AlphaAbsSums alpha_abs_sum_identity_direct(std::uint64_t n) {
    if (n == 0) throw DomainError("alpha_abs_sum_identity_direct: n must be >= 1");
    std::int64_t full = 0, excluding = 0;
    for (std::uint64_t ell = 0; ell < n; ++ell) {
        const std::int64_t v = std::llabs(ramanujan_sum_direct(n, static_cast<std::int64_t>(ell)).round_to_int());
        full += v;
        if (ell > 0) excluding += v;
    }
    return assemble_alpha_sums(n, excluding, full);
}

} // namespace qnrnp::charsums
