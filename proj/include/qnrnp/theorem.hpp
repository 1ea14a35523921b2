#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnrnp/arith.hpp"
#include "qnrnp/rational.hpp"
#include "qnrnp/residues.hpp"

namespace qnrnp::theorem {

// Hard ceiling for scan ranges unless the caller raises it explicitly
// (the CLI maps QNRNP_MAX_P onto this).
inline constexpr std::uint64_t kDefaultScanLimit = 1'000'000;

struct SearchParams {
    std::uint64_t q = 1;
    Rational epsilon{1, 11};
};

// q >= 1 and 1/11 <= epsilon < 1/2, the admissible hypothesis window.
void validate_params(const SearchParams& params);

// Two evaluations of the same count plus the main-term/error split.
// n_brute and n_formula must agree; |n_formula - main_term| is e_p_actual
// and the analytic bound on it is e_p_bound.
struct CountReport {
    std::uint64_t p = 0;
    std::uint64_t q = 1;
    std::uint64_t n_brute = 0;
    std::uint64_t n_formula = 0;
    Rational main_term;
    double e_p_actual = 0.0;
    double e_p_bound = 0.0;

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

struct TheoremCertificate {
    std::uint64_t p = 0;
    std::uint64_t q = 1;
    Rational epsilon{1, 11};
    bool cond_congruence = false; // p = 1 (mod q)
    bool cond_size = false;       // log log p > log 6.83 / (1/2 - epsilon)
    bool cond_ratio = false;      // phi(p-1)/(p-1) <= 1/2 - epsilon, exact
    std::uint64_t n_p = 0;
    std::optional<residues::UnitResidue> witness;

    friend bool operator==(const TheoremCertificate&, const TheoremCertificate&) = default;
};

struct ThresholdInfo {
    Rational epsilon{1, 11};
    double min_loglog = 0.0;
    double min_log = 0.0;
    // Saturates at INT64_MAX when epsilon is close enough to 1/2 that the
    // digit count itself overflows.
    std::int64_t min_p_decimal_digits = 0;

    friend bool operator==(const ThresholdInfo&, const ThresholdInfo&) = default;
};

struct ChainLink {
    std::string name;
    std::string statement;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // slack in the passing direction; negative = violated
    bool holds = false;

    friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

struct ChainReport {
    std::vector<ChainLink> links;
    bool all_hold = false;

    friend bool operator==(const ChainReport&, const ChainReport&) = default;
};

struct ScanSummary {
    std::uint64_t primes = 0;     // primes scanned (those with p = 1 mod q)
    std::uint64_t ratio_true = 0; // of those, cond_ratio holds
    std::uint64_t ratio_true_with_qnrnp = 0; // and n_p >= 1

    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct ScanResult {
    std::vector<TheoremCertificate> certificates;
    ScanSummary summary;
};

// Enumerates m in [1, p-1], counting QNRNPs with gcd(m, (p-1)/q) = 1.
// Classification goes through Euler's criterion and order computation,
// deliberately independent of the index-table route.
std::uint64_t count_qnrnp_coprime_brute(std::uint64_t p, std::uint64_t q);

// Character-sum evaluation of the same count. All arithmetic is exact
// integer work: the inner character sums collapse to Ramanujan sums grouped
// by gcd class, so the only "rounding" is an exact divisibility check.
CountReport count_qnrnp_coprime_formula(const residues::IndexTable& table, std::uint64_t q);
CountReport count_qnrnp_coprime_formula(std::uint64_t p, std::uint64_t q,
                                        std::uint64_t limit = residues::kDefaultIndexTableLimit);

// Literal per-character evaluation with complex arithmetic and budgeted
// rounding. Quadratic in p, meant for small cross-checks of the grouped route.
CountReport count_qnrnp_coprime_formula_numeric(const residues::IndexTable& table, std::uint64_t q);

// Brute count of m in [1, p-1] with gcd(m, (p-1)/q) = 1; equals
// q * phi((p-1)/q), which tests assert.
std::uint64_t coprime_unit_count(std::uint64_t p, std::uint64_t q);

// Evaluates all three hypotheses and, when q | p-1, counts and finds the
// smallest witness g in (1, p-1) with classify(g) = qnrnp and
// gcd(g, (p-1)/q) = 1. The count n_p runs over the closed range [1, p-1],
// so n_p >= 1 with an absent witness is possible exactly when p-1 is the
// only qualifying element.
TheoremCertificate certify(std::uint64_t p, const SearchParams& params,
                           std::uint64_t limit = residues::kDefaultIndexTableLimit);

// min_loglog = ln 6.83 / (1/2 - eps) and its exponentials, at 256-bit
// precision. Exact integers for threshold-scale primes are never built.
ThresholdInfo threshold(const SearchParams& params);

// The numeric links of the proof's inequality chain, each checked in
// 256-bit arithmetic with its slack reported.
ChainReport verify_inequality_chain();

// Smallest primitive root g mod p with gcd(g, p-1) = 1. Exists for every
// prime p >= 5; NoWitnessError otherwise (which would be a finding).
residues::UnitResidue lps_witness(std::uint64_t p);
residues::UnitResidue lps_witness(std::uint64_t p, const arith::Factorization& p_minus_1);

// Certificates for every prime in [p_min, p_max] with p = 1 (mod q), in
// ascending p order regardless of worker count. ResourceError if p_max
// exceeds limit.
ScanResult scan(std::uint64_t p_min, std::uint64_t p_max, const SearchParams& params,
                unsigned jobs = 1, std::uint64_t limit = kDefaultScanLimit);

} // namespace qnrnp::theorem
