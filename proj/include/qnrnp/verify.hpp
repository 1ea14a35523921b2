#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qnrnp::verify {

struct SuiteItem {
    std::string name;
    bool pass = false;
    std::string detail;

    friend bool operator==(const SuiteItem&, const SuiteItem&) = default;
};

// Outcome of one invariant sweep. `checked` counts individual comparisons;
// `items` carries every notable line (all failures up to a cap, plus the
// summary lines a reader needs), `failures` counts all failing comparisons
// including suppressed ones.
struct SuiteReport {
    std::string suite;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<SuiteItem> items;
    bool all_pass = true;

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// beta_ell(p-1) from the defining sum against -c_{p-1}(ell) for all
// 0 < ell < p-1, primes 5..p_max. The textbook identity fails at exactly
// ell = (p-1)/2 for every prime, and this suite reports that honestly.
SuiteReport run_lemma21(std::uint64_t p_max = 2000);

// characteristic_value lands in {0, p-1} and agrees with classify_unit for
// every unit, under two primitive-root choices per prime (one when only one
// root exists).
SuiteReport run_lemma22(std::uint64_t p_max = 500);

// Summation-range audit for sum |c_n(ell)| = 2^omega(n) phi(n): probes the
// candidate ranges at n in {4, 12, 30} with the direct complex oracle, then
// sweeps all even n <= n_max with the exact evaluator.
SuiteReport run_lemma24(std::uint64_t n_max = 10000);

// Interval character sums against the sqrt(p) log p bound: every interval
// and character exhaustively up to p_exhaustive, deterministic samples up
// to p_sampled.
SuiteReport run_polya(std::uint64_t p_exhaustive = 300, std::uint64_t p_sampled = 5000);

// The numeric inequality links, one item each.
SuiteReport run_chain();

// Coprime primitive root exists for every prime 5..p_max.
SuiteReport run_lps(std::uint64_t p_max = 100000);

// Formula count == literal brute count for every prime 3..p_max and every
// divisor q of p-1, plus the error-bound inequality, plus numeric-route
// cross-checks at small p.
SuiteReport run_formula(std::uint64_t p_max = 2000);

// Dispatch by suite name {lemma21, lemma22, lemma24, polya, chain, lps,
// formula}; p_max = 0 means the suite default. DomainError on unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t p_max = 0);

} // namespace qnrnp::verify
