// Acceptance gate: twelve independently runnable criteria, one pass/fail
// line each. Run with --criterion N (1..12), or no arguments for all twelve.
// Criterion 11 drives the installed CLI binary; pass its path with --cli or
// the QNRNP_CLI_PATH environment variable.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "qnrnp/arith.hpp"
#include "qnrnp/charsums.hpp"
#include "qnrnp/errors.hpp"
#include "qnrnp/fixedpoint.hpp"
#include "qnrnp/rational.hpp"
#include "qnrnp/residues.hpp"
#include "qnrnp/theorem.hpp"
#include "qnrnp/verify.hpp"

using namespace qnrnp;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 10) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

// Shared engine for criteria 1 and 2: sweep every prime p <= 10^4 and every
// divisor q of p-1, comparing the grouped exact formula against a literal
// classification count and checking the error bound.
struct CountSweep {
    std::uint64_t pairs = 0;
    std::uint64_t count_mismatches = 0;
    std::uint64_t bound_violations = 0;
    std::uint64_t first_bad_p = 0, first_bad_q = 0;
    double worst_bound_ratio = 0.0; // |e_p| / bound, maximized
    std::uint64_t worst_p = 0, worst_q = 0;
    double max_abs_e_p = 0.0;
    double elapsed = 0.0;
};

const CountSweep& count_sweep() {
    static CountSweep s = [] {
        CountSweep r;
        auto t0 = std::chrono::steady_clock::now();
        arith::SpfSieve sieve(10000);
        for (std::uint64_t p : arith::primes_in_range(3, 10000)) {
            arith::Factorization fn = arith::factorize(p - 1, sieve);
            // Literal side: classify every unit through order and Euler
            // criterion computations; no discrete-log table involved.
            std::vector<char> is_q(p, 0);
            for (std::uint64_t m = 1; m < p; ++m)
                is_q[m] = residues::classify_unit(residues::unit(p, m), fn) ==
                          residues::UnitClass::Qnrnp;
            residues::IndexTable table = residues::build_index_table(p);
            for (std::uint64_t q : fn.divisors()) {
                std::uint64_t cof = (p - 1) / q;
                std::uint64_t literal = 0;
                for (std::uint64_t m = 1; m < p; ++m)
                    if (is_q[m] && std::gcd(m, cof) == 1) ++literal;

                theorem::CountReport rep = theorem::count_qnrnp_coprime_formula(table, q);
                ++r.pairs;
                if (rep.n_formula != literal || rep.n_brute != literal) {
                    if (r.count_mismatches == 0) {
                        r.first_bad_p = p;
                        r.first_bad_q = q;
                    }
                    ++r.count_mismatches;
                }
                double ratio = rep.e_p_bound > 0 ? std::abs(rep.e_p_actual) / rep.e_p_bound : 0.0;
                if (ratio > r.worst_bound_ratio) {
                    r.worst_bound_ratio = ratio;
                    r.worst_p = p;
                    r.worst_q = q;
                }
                r.max_abs_e_p = std::max(r.max_abs_e_p, std::abs(rep.e_p_actual));
                if (std::abs(rep.e_p_actual) > rep.e_p_bound) ++r.bound_violations;
                // Periodically pin the public brute-force entry point too.
                if (r.pairs % 64 == 0 &&
                    theorem::count_qnrnp_coprime_brute(p, q) != literal)
                    ++r.count_mismatches;
            }
        }
        r.elapsed = seconds_since(t0);
        return r;
    }();
    return s;
}

Outcome criterion01() {
    const CountSweep& s = count_sweep();
    std::ostringstream d;
    if (s.count_mismatches == 0)
        d << "exact formula equals the literal classification count on all " << s.pairs
          << " (p, q) pairs with p <= 10^4, " << fmt(s.elapsed, 3) << " s";
    else
        d << s.count_mismatches << " of " << s.pairs
          << " (p, q) pairs disagree; first at p = " << s.first_bad_p
          << ", q = " << s.first_bad_q;
    return {s.count_mismatches == 0, d.str()};
}

Outcome criterion02() {
    const CountSweep& s = count_sweep();
    std::ostringstream d;
    d << "error bound held on all " << s.pairs << " pairs; worst |e_p|/bound = "
      << fmt(s.worst_bound_ratio, 6) << " at p = " << s.worst_p << ", q = " << s.worst_q
      << "; max |e_p| = " << fmt(s.max_abs_e_p, 6);
    if (s.bound_violations > 0) {
        d.str("");
        d << s.bound_violations << " bound violations out of " << s.pairs << " pairs";
    }
    return {s.bound_violations == 0, d.str()};
}

Outcome criterion03() {
    // The claim under test: for 0 < ell < p-1, the odd-nonunit-index sum
    // beta_ell equals the negated Ramanujan sum. The defining sum says
    // otherwise at exactly ell = (p-1)/2, where the value is
    // phi(p-1) - (p-1)/2; both routes (closed form and direct complex
    // summation) agree on that. The sweep documents the systematic exception
    // rather than hiding it.
    std::uint64_t primes = 0, clean_pattern = 0, other_failures = 0;
    std::uint64_t ells_checked = 0;
    std::string first_example;
    for (std::uint64_t p : arith::primes_in_range(5, 2000)) {
        charsums::Lemma21Report rep = charsums::verify_lemma21(p - 1);
        ++primes;
        ells_checked += p - 2;
        bool half_only = rep.beta_matches_direct &&
                         rep.exception_ells == std::vector<std::uint64_t>{(p - 1) / 2};
        if (half_only) {
            ++clean_pattern;
            if (first_example.empty()) {
                std::ostringstream ex;
                ex << "p = " << p << ": direct sum at ell = " << (p - 1) / 2 << " is "
                   << charsums::beta_sum(p - 1, (p - 1) / 2).value << ", negated Ramanujan value is "
                   << -charsums::ramanujan_sum(p - 1, static_cast<std::int64_t>((p - 1) / 2)).value;
                first_example = ex.str();
            }
        } else {
            ++other_failures;
        }
    }
    std::ostringstream d;
    if (other_failures == 0)
        d << "identity fails at ell = (p-1)/2 for every one of the " << primes
          << " primes in [5, 2000] (" << ells_checked
          << " ells checked; all other ells agree; closed form matches the defining sum "
             "everywhere). "
          << first_example
          << "; the half-period coefficient is phi(p-1) - (p-1)/2, so no implementation "
             "can satisfy the stated identity";
    else
        d << other_failures << " primes show failures away from the half period "
             "(implementation defect, not the known exception)";
    return {false, d.str()};
}

Outcome criterion04() {
    verify::SuiteReport rep = verify::run_suite("lemma22", 500);
    std::ostringstream d;
    d << "characteristic value lies in {0, p-1} and matches classification for all "
         "units of all p <= 500 under two primitive-root choices (p = 3 has only one "
         "root); "
      << rep.checked << " checks, " << rep.failures << " failures";
    return {rep.all_pass, d.str()};
}

Outcome criterion05() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t bad1 = 0, bad2 = 0, bad3 = 0;
    std::uint64_t first1 = 0;
    for (std::uint64_t p : arith::primes_in_range(5, 1000000)) {
        arith::OmegaBoundCheck c = arith::omega_bound_check(p);
        if (!c.holds) {
            if (bad1 == 0) first1 = p;
            ++bad1;
        }
    }
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        if (arith::mobius_divisor_sum(n) != (n == 1 ? 1 : 0)) ++bad2;
        arith::Factorization f = arith::factorize(n);
        if (arith::squarefree_divisor_count(n) != (1ULL << f.omega())) ++bad3;
    }
    std::ostringstream d;
    if (bad1 + bad2 + bad3 == 0)
        d << "omega(p-1) <= 1.385 ln p / ln ln p for all 78498 primes in [5, 10^6]; "
             "sum of mu over divisors is the n = 1 indicator and the squarefree divisor "
             "count is 2^omega for all n <= 10^5; "
          << fmt(seconds_since(t0), 3) << " s";
    else
        d << "violations: omega bound " << bad1 << " (first p = " << first1
          << "), mobius sum " << bad2 << ", squarefree count " << bad3;
    return {bad1 + bad2 + bad3 == 0, d.str()};
}

Outcome criterion06() {
    // Probe the three candidate summation ranges for sum |c_n(ell)| = 2^omega(n) phi(n)
    // at n in {4, 12, 30} with the direct complex oracle, then sweep all even
    // n <= 10^4 with exact values.
    std::ostringstream d;
    bool probes_ok = true;
    for (std::uint64_t n : {4ULL, 12ULL, 30ULL}) {
        charsums::AlphaAbsSums a = charsums::alpha_abs_sum_identity_direct(n);
        arith::Factorization f = arith::factorize(n);
        // Third candidate, ell in [0, n-2]: full period minus the last term,
        // whose magnitude is |mu(n)| since gcd(n-1, n) = 1.
        std::int64_t drop_last = a.sum_full_period - std::abs(arith::mobius(f));
        bool full_ok = a.full_period_matches;
        bool excl_ok = a.excluding_zero_matches;
        bool droplast_ok = drop_last == a.rhs;
        if (!full_ok || excl_ok) probes_ok = false;
        if (n == 30 && droplast_ok) probes_ok = false; // 63 != 64 distinguishes it
        d << "n=" << n << ": full=" << a.sum_full_period << " no-zero=" << a.sum_excluding_zero
          << " drop-last=" << drop_last << " rhs=" << a.rhs << "; ";
    }
    std::uint64_t sweep_bad = 0;
    for (std::uint64_t n = 2; n <= 10000; n += 2) {
        charsums::AlphaAbsSums a = charsums::alpha_abs_sum_identity(n);
        if (!a.full_period_matches || a.excluding_zero_matches) ++sweep_bad;
    }
    bool pass = probes_ok && sweep_bad == 0;
    std::ostringstream out;
    out << "confirmed range: ell over the full period [0, n-1] (equivalently 0..p-2 "
           "for n = p-1), uniquely; dropping ell = 0 undercounts by phi(n) and "
           "dropping ell = n-1 fails at squarefree n (probe n = 30: 63 != 64). "
        << d.str() << "sweep over even n <= 10^4: " << sweep_bad << " exceptions";
    return {pass, out.str()};
}

Outcome criterion07() {
    auto t0 = std::chrono::steady_clock::now();
    verify::SuiteReport rep = verify::run_suite("polya", 0);
    std::ostringstream d;
    d << "interval character sums stayed within sqrt(p) ln p: " << rep.checked
      << " checks (exhaustive p <= 300, sampled to 5000), " << rep.failures
      << " violations, " << fmt(seconds_since(t0), 3) << " s";
    return {rep.all_pass, d.str()};
}

Outcome criterion08() {
    theorem::ChainReport rep = theorem::verify_inequality_chain();
    double margin_a = 0.0;
    bool found_a = false;
    for (const auto& link : rep.links)
        if (link.name == "a") {
            margin_a = link.margin;
            found_a = true;
        }
    bool margin_clause = found_a && margin_a >= 0.009;
    std::ostringstream d;
    if (rep.all_hold && !margin_clause) {
        d << "every inequality in the chain holds, but the required margin on "
             "4^1.385 <= 6.83 does not: 4^1.385 = " << fmt(6.83 - margin_a, 10)
          << ", leaving " << fmt(margin_a, 10)
          << " < 0.009; the other stated checks pass (22 ln 1.1 + 22 ln 11 = "
          << fmt(22 * std::log(1.1) + 22 * std::log(11.0), 8)
          << " <= 54.86 < 107.7, e^4.68/4.68 = " << fmt(std::exp(4.68) / 4.68, 8)
          << " >= 22)";
    } else if (!rep.all_hold) {
        d << "a chain link fails outright";
    } else {
        d << "all links hold with margins at or above the stated floors";
    }
    return {rep.all_hold && margin_clause, d.str()};
}

Outcome criterion09() {
    auto t0 = std::chrono::steady_clock::now();
    verify::SuiteReport rep = verify::run_suite("lps", 100000);
    std::ostringstream d;
    d << "a primitive root coprime to p-1 exists (and was exhibited) for every prime "
         "5 <= p <= 10^5: "
      << rep.checked << " primes, " << rep.failures << " failures, "
      << fmt(seconds_since(t0), 3) << " s";
    return {rep.all_pass, d.str()};
}

Outcome criterion10() {
    std::uint64_t constructed = 0, refused = 0, bad = 0;
    std::uint64_t first_bad = 0;
    for (std::uint64_t p : arith::primes_in_range(3, 2000)) {
        bool exists = false;
        for (std::uint64_t m = 2; m < p; ++m)
            if (std::gcd(m, p - 1) == 1 && oracle::unit_class(p, m) == 2) {
                exists = true;
                break;
            }
        try {
            fixedpoint::FixedPointResult r = fixedpoint::construct_fixed_point(p);
            bool g_is_qnrnp = oracle::unit_class(p, r.g.value) == 2;
            bool fixed = oracle::pow_mod(r.g.value, r.x.value, p) == r.x.value;
            if (!exists || !r.verified || !g_is_qnrnp || !fixed) {
                if (bad == 0) first_bad = p;
                ++bad;
            } else {
                ++constructed;
            }
        } catch (const NoWitnessError&) {
            if (exists) {
                if (bad == 0) first_bad = p;
                ++bad;
            } else {
                ++refused;
            }
        }
    }
    bool small_ok = true;
    for (std::uint64_t p : {5ULL, 7ULL}) {
        try {
            fixedpoint::construct_fixed_point(p);
            small_ok = false;
        } catch (const NoWitnessError&) {
        }
    }
    std::ostringstream d;
    if (bad == 0 && small_ok)
        d << "fixed point g^x = x constructed and verified (g itself qnrnp) for all "
          << constructed << " primes <= 2000 admitting a qnrnp coprime to p-1; "
          << refused << " primes (including 5 and 7) correctly refused";
    else
        d << bad << " primes misbehaved (first: " << first_bad
          << "); small-prime refusal ok: " << (small_ok ? "yes" : "no");
    return {bad == 0 && small_ok, d.str()};
}

Outcome criterion11(const std::string& cli_path) {
    if (cli_path.empty())
        return {false, "path to the CLI binary not provided (--cli or QNRNP_CLI_PATH)"};
    namespace fs = std::filesystem;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> outputs;
    for (int jobs : {1, 4, 8}) {
        fs::path out = fs::temp_directory_path() /
                       ("qnrnp_acceptance_scan_j" + std::to_string(jobs) + "_" +
                        std::to_string(static_cast<unsigned long>(getpid())) + ".json");
        std::string cmd = "\"" + cli_path + "\" scan --pmin 5 --pmax 100000 --q 1 "
                          "--epsilon 1/11 --jobs " + std::to_string(jobs) +
                          " > \"" + out.string() + "\" 2>/dev/null";
        int rc = std::system(cmd.c_str());
        if (rc != 0) {
            fs::remove(out);
            return {false, "scan with --jobs " + std::to_string(jobs) +
                               " exited nonzero (" + std::to_string(rc) + ")"};
        }
        std::ifstream f(out, std::ios::binary);
        outputs.emplace_back(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
        fs::remove(out);
    }
    bool identical = outputs[0] == outputs[1] && outputs[1] == outputs[2];
    std::ostringstream d;
    if (identical) {
        nlohmann::json j = nlohmann::json::parse(outputs[0]);
        d << "scan to 10^5 byte-identical across jobs {1, 4, 8} (" << outputs[0].size()
          << " bytes); recorded: " << j["summary"]["ratio_true_with_qnrnp"] << " of "
          << j["summary"]["ratio_true"]
          << " ratio-condition primes have a nonzero count, " << j["summary"]["primes"]
          << " primes total, " << fmt(seconds_since(t0), 3) << " s for all three runs";
    } else {
        d << "outputs differ across job counts: " << outputs[0].size() << " / "
          << outputs[1].size() << " / " << outputs[2].size() << " bytes";
    }
    return {identical, d.str()};
}

Outcome criterion12() {
    theorem::ThresholdInfo t = theorem::threshold({1, Rational(1, 11)});
    bool loglog_ok = t.min_loglog > 4.68 && t.min_loglog < 4.71;
    bool log_ok = t.min_log > 107.7;
    std::ostringstream d;
    d << "epsilon = 1/11 forces ln ln p > " << fmt(t.min_loglog, 10) << " (inside (4.68, 4.71)) "
      << "and ln p > " << fmt(t.min_log, 10) << " > 107.7, i.e. p of at least "
      << t.min_p_decimal_digits << " decimal digits";
    if (!loglog_ok || !log_ok) {
        d.str("");
        d << "threshold out of range: min_loglog = " << fmt(t.min_loglog, 10)
          << ", min_log = " << fmt(t.min_log, 10);
    }
    return {loglog_ok && log_ok, d.str()};
}

Outcome run_criterion(int n, const std::string& cli_path) {
    switch (n) {
        case 1: return criterion01();
        case 2: return criterion02();
        case 3: return criterion03();
        case 4: return criterion04();
        case 5: return criterion05();
        case 6: return criterion06();
        case 7: return criterion07();
        case 8: return criterion08();
        case 9: return criterion09();
        case 10: return criterion10();
        case 11: return criterion11(cli_path);
        case 12: return criterion12();
        default: return {false, "unknown criterion"};
    }
}

} // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    std::string cli_path;
    if (const char* env = std::getenv("QNRNP_CLI_PATH")) cli_path = env;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            criterion = std::atoi(argv[++i]);
        else if (arg == "--cli" && i + 1 < argc)
            cli_path = argv[++i];
        else {
            std::fprintf(stderr, "usage: acceptance [--criterion N] [--cli PATH]\n");
            return 2;
        }
    }
    if (criterion < 0 || criterion > 12) {
        std::fprintf(stderr, "criterion must be 1..12\n");
        return 2;
    }

    int failures = 0;
    auto emit = [&](int n) {
        Outcome o;
        try {
            o = run_criterion(n, cli_path);
        } catch (const std::exception& e) {
            o = {false, std::string("unexpected error: ") + e.what()};
        }
        std::printf("C%02d %s: %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    };
    if (criterion == 0)
        for (int n = 1; n <= 12; ++n) emit(n);
    else
        emit(criterion);
    return failures == 0 ? 0 : 1;
}
