#pragma once

#include <cstdint>
#include <vector>

#include "qnrnp/arith.hpp"
#include "qnrnp/errors.hpp"
#include "qnrnp/residues.hpp"

namespace qnrnp::charsums {

// Ramanujan sum c_n(ell) = sum of eta^{i*ell} over i in [1,n] coprime to n,
// eta a primitive n-th root of unity. Closed form:
//   c_n(ell) = mu(n/d) * phi(n) / phi(n/d),  d = gcd(ell, n).
struct RamanujanValue {
    std::uint64_t n = 0;
    std::uint64_t ell = 0; // reduced mod n
    std::int64_t value = 0;
};

// beta_ell(n) = sum of eta^{i*ell} over odd i in [1,n] with gcd(i,n) > 1,
// n even. In index space these i are exactly the indices of the units that
// are neither squares nor generators, which is what makes this the right
// coefficient set for counting them.
struct BetaValue {
    std::uint64_t n = 0;
    std::uint64_t ell = 0;
    std::int64_t value = 0;
};

// A numerically accumulated complex sum plus the absolute error budget its
// consumers may rely on.
struct ComplexSum {
    double re = 0.0;
    double im = 0.0;
    double abs_error_budget = 0.0;

    double modulus() const;
    // Nearest integer to re, provided |re - round(re)| and |im| both fit the
    // budget; throws PrecisionError otherwise.
    std::int64_t round_to_int() const;
};

// max(1e-6, n * 2^-40): roomy for double accumulation at desk scale.
double sum_budget(std::uint64_t n);

RamanujanValue ramanujan_sum(std::uint64_t n, std::int64_t ell);

// Closed-form value of c_m(k) given gcd_km = gcd(k, m); helper for callers
// that batch over many k (avoids refactoring m each time).
std::int64_t ramanujan_value(const arith::Factorization& m, std::uint64_t gcd_km);

// Exact beta values. beta_0(n) = n/2 - phi(n). For 0 < ell < n the value is
// -c_n(ell) with one exception: at ell = n/2 the even-index geometric sum
// stops vanishing and beta_{n/2}(n) = phi(n) - n/2. (The quadratic-character
// slot genuinely differs from the negated Ramanujan sum; see
// verify_lemma21, which surfaces this from the defining sum.)
BetaValue beta_sum(std::uint64_t n, std::uint64_t ell);

// Direct complex-summation routes, kept as oracles for the closed forms.
ComplexSum ramanujan_sum_direct(std::uint64_t n, std::int64_t ell);
ComplexSum beta_sum_direct(std::uint64_t n, std::uint64_t ell);

// Compares the defining sum for beta_ell against -c_n(ell) for every
// 0 < ell < n, and against the production beta_sum values.
struct Lemma21Report {
    std::uint64_t n = 0;
    // The textbook identity "beta_ell = -c_n(ell) for all 0 < ell < n".
    bool stated_identity_holds = false;
    // Production values match the defining sum everywhere (implementation check).
    bool beta_matches_direct = false;
    std::vector<std::uint64_t> exception_ells; // where the stated identity fails
    double max_exception_error = 0.0;          // |direct - (-c)| over exceptions
};
Lemma21Report verify_lemma21(std::uint64_t n);

// sum over ell in [0, n-1] of beta_ell(n) * eta^{ell * ind(x)}, rounded.
// Equals p-1 when x is a QNRNP and 0 otherwise; the roundoff must stay
// within sum_budget(p-1) or PrecisionError is thrown.
std::int64_t characteristic_value(const residues::IndexTable& table, const residues::UnitResidue& x);

// sum over m in [M, N] of chi_ell(m), chi_ell(m) = eta^{ell * ind(m)} for
// units and chi_ell(0) = 0. Requires 0 <= M <= N <= p-1 and ell not
// divisible by p-1 (the principal character is excluded).
ComplexSum interval_character_sum(const residues::IndexTable& table, std::uint64_t ell,
                                  std::uint64_t M, std::uint64_t N);

// sum over m in [1, p-1] with gcd(m, (p-1)/q) = 1 of chi_ell(m), computed
// both by direct filtering and through the Moebius expansion
//   sum_{d | (p-1)/q} mu(d) chi_ell(d) sum_{t=1}^{(p-1)/d} chi_ell(t);
// the two must agree within budget (PrecisionError otherwise) and the direct
// value is returned. Requires q | p-1.
ComplexSum coprime_restricted_sum(const residues::IndexTable& table, std::uint64_t ell, std::uint64_t q);

// Absolute Ramanujan sums over the two candidate summation ranges, against
// rhs = 2^omega(n) * phi(n). The full period [0, n-1] is the range that
// satisfies the identity; [1, n-1] undercounts by phi(n).
struct AlphaAbsSums {
    std::uint64_t n = 0;
    std::int64_t sum_excluding_zero = 0; // ell in [1, n-1]
    std::int64_t sum_full_period = 0;    // ell in [0, n-1]
    std::int64_t rhs = 0;
    bool excluding_zero_matches = false;
    bool full_period_matches = false;
};
AlphaAbsSums alpha_abs_sum_identity(std::uint64_t n);
// Same sums from the direct complex oracle (small n).
AlphaAbsSums alpha_abs_sum_identity_direct(std::uint64_t n);

} // namespace qnrnp::charsums
