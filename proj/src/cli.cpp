#include "qnrnp/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qnrnp/charsums.hpp"
#include "qnrnp/errors.hpp"
#include "qnrnp/fixedpoint.hpp"
#include "qnrnp/rational.hpp"
#include "qnrnp/residues.hpp"
#include "qnrnp/serialize.hpp"
#include "qnrnp/theorem.hpp"
#include "qnrnp/verify.hpp"

namespace qnrnp::cli {

namespace {

struct Limits {
    std::uint64_t table;
    std::uint64_t scan;
};

// QNRNP_MAX_P raises (or lowers) both resource ceilings at once.
Limits resolve_limits() {
    Limits lim{residues::kDefaultIndexTableLimit, theorem::kDefaultScanLimit};
    const char* env = std::getenv("QNRNP_MAX_P");
    if (env == nullptr || *env == '\0') return lim;
    std::uint64_t value = 0;
    for (const char* c = env; *c != '\0'; ++c) {
        if (*c < '0' || *c > '9')
            throw DomainError("QNRNP_MAX_P must be an unsigned integer");
        std::uint64_t digit = static_cast<std::uint64_t>(*c - '0');
        if (value > (UINT64_MAX - digit) / 10)
            throw DomainError("QNRNP_MAX_P out of range");
        value = value * 10 + digit;
    }
    if (value == 0) throw DomainError("QNRNP_MAX_P must be positive");
    lim.table = value;
    lim.scan = value;
    return lim;
}

serialize::json make_envelope(const std::string& command, serialize::json params) {
    serialize::json j;
    j["schema_version"] = "1";
    j["command"] = command;
    j["params"] = std::move(params);
    j["results"] = serialize::json::array();
    j["summary"] = serialize::json::object();
    return j;
}

// Writes via a sibling temp file plus rename so readers never observe a
// partially written result.
void write_atomic(const std::string& path, const std::string& data) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ResourceError("cannot open " + tmp.string() + " for writing");
        f << data;
        f.flush();
        if (!f) throw ResourceError("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw ResourceError("cannot rename temp file onto " + path);
    }
}

void emit(const serialize::json& envelope, const std::string& out_path, std::ostream& out) {
    std::string data = envelope.dump(2);
    data.push_back('\n');
    if (out_path.empty())
        out << data;
    else
        write_atomic(out_path, data);
}

int cmd_classify(std::uint64_t p, const Limits& lim, std::ostream& out) {
    residues::IndexTable table = residues::build_index_table(p, lim.table);
    std::uint64_t n = table.n();

    serialize::json env = make_envelope("classify", {{"p", p}});
    std::uint64_t counts[3] = {0, 0, 0};
    std::vector<std::uint64_t> qnrnp_values;
    for (std::uint64_t m = 1; m < p; ++m) {
        std::uint32_t k = table.index[m];
        residues::UnitClass cls = residues::classify_index(k, n);
        counts[static_cast<int>(cls)] += 1;
        if (cls == residues::UnitClass::Qnrnp) qnrnp_values.push_back(m);
        env["results"].push_back({
            {"value", m},
            {"index", k},
            {"class", residues::to_string(cls)},
        });
    }
    env["summary"] = {
        {"p", p},
        {"root", table.root},
        {"quadratic_residues", counts[0]},
        {"primitive_roots", counts[1]},
        {"qnrnp", counts[2]},
        {"qnrnp_set", qnrnp_values},
    };
    emit(env, "", out);
    return 0;
}

int cmd_count(std::uint64_t p, std::uint64_t q, const Limits& lim, std::ostream& out) {
    theorem::CountReport rep = theorem::count_qnrnp_coprime_formula(p, q, lim.table);
    serialize::json env = make_envelope("count", {{"p", p}, {"q", q}});
    env["results"].push_back(serialize::to_json(rep));
    env["summary"] = {
        {"agree", rep.n_brute == rep.n_formula},
        {"error_within_bound", std::abs(rep.e_p_actual) <= rep.e_p_bound},
    };
    emit(env, "", out);
    return 0;
}

int cmd_certify(std::uint64_t p, std::uint64_t q, const Rational& eps,
                const Limits& lim, std::ostream& out) {
    theorem::SearchParams params{q, eps};
    theorem::TheoremCertificate cert = theorem::certify(p, params, lim.table);
    serialize::json env =
        make_envelope("certify", {{"p", p}, {"q", q}, {"epsilon", eps.to_string()}});
    env["results"].push_back(serialize::to_json(cert));
    env["summary"] = {
        {"all_conditions", cert.cond_congruence && cert.cond_size && cert.cond_ratio},
        {"has_witness", cert.witness.has_value()},
    };
    emit(env, "", out);
    return 0;
}

int cmd_thresholds(const Rational& eps, std::ostream& out) {
    theorem::SearchParams params{1, eps};
    theorem::ThresholdInfo info = theorem::threshold(params);
    serialize::json env = make_envelope("thresholds", {{"epsilon", eps.to_string()}});
    env["results"].push_back(serialize::to_json(info));
    env["summary"] = {{"min_p_decimal_digits", info.min_p_decimal_digits}};
    emit(env, "", out);
    return 0;
}

int cmd_scan(std::uint64_t pmin, std::uint64_t pmax, std::uint64_t q, const Rational& eps,
             unsigned jobs, const std::string& format, const std::string& out_path,
             const Limits& lim, std::ostream& out) {
    theorem::SearchParams params{q, eps};
    theorem::ScanResult res = theorem::scan(pmin, pmax, params, jobs, lim.scan);

    if (format == "csv") {
        std::ostringstream csv;
        csv << serialize::csv_header() << '\n';
        for (const auto& cert : res.certificates)
            csv << serialize::csv_row(cert) << '\n';
        csv << "# primes=" << res.summary.primes << '\n';
        csv << "# ratio_true=" << res.summary.ratio_true << '\n';
        csv << "# ratio_true_with_qnrnp=" << res.summary.ratio_true_with_qnrnp << '\n';
        if (out_path.empty())
            out << csv.str();
        else
            write_atomic(out_path, csv.str());
        return 0;
    }

    // jobs/format/out shape execution, not the result, so they stay out of
    // the envelope: reruns with different parallelism must be byte-identical.
    serialize::json env = make_envelope("scan", {
        {"pmin", pmin},
        {"pmax", pmax},
        {"q", q},
        {"epsilon", eps.to_string()},
    });
    for (const auto& cert : res.certificates)
        env["results"].push_back(serialize::to_json(cert));
    env["summary"] = serialize::to_json(res.summary);
    emit(env, out_path, out);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t pmax, bool pmax_given,
               std::ostream& out) {
    verify::SuiteReport rep = verify::run_suite(suite, pmax_given ? pmax : 0);
    serialize::json params = {{"suite", suite}};
    if (pmax_given) params["pmax"] = pmax;
    serialize::json env = make_envelope("verify", std::move(params));
    for (const auto& item : rep.items)
        env["results"].push_back(serialize::to_json(item));
    env["summary"] = {
        {"suite", rep.suite},
        {"checked", rep.checked},
        {"failures", rep.failures},
        {"all_pass", rep.all_pass},
    };
    emit(env, "", out);
    return rep.all_pass ? 0 : 3;
}

int cmd_fixed_point(std::uint64_t p, std::ostream& out) {
    serialize::json env = make_envelope("fixed-point", {{"p", p}});
    try {
        fixedpoint::FixedPointResult res = fixedpoint::construct_fixed_point(p);
        env["results"].push_back(serialize::to_json(res));
        env["summary"] = {{"status", "ok"}, {"verified", res.verified}};
    } catch (const NoWitnessError& e) {
        // Absence of a usable residue is a legitimate outcome, not a failure.
        env["summary"] = {{"status", "no_witness"}, {"reason", e.what()}};
    }
    emit(env, "", out);
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"qnrnp: quadratic non-residues that are not primitive roots"};
    app.require_subcommand(1);

    std::uint64_t p = 0;
    std::uint64_t q = 1;
    std::uint64_t pmin = 0;
    std::uint64_t pmax = 0;
    std::string epsilon_text = "1/11";
    unsigned jobs = 1;
    std::string format = "json";
    std::string out_path;
    std::string suite;
    std::uint64_t verify_pmax = 0;

    auto* classify = app.add_subcommand(
        "classify", "classify every unit mod p (quadratic residue / primitive root / neither)");
    classify->add_option("--p", p, "odd prime modulus")->required();

    auto* count = app.add_subcommand(
        "count", "count qnrnp elements coprime to (p-1)/q, brute force and exact formula");
    count->add_option("--p", p, "odd prime modulus")->required();
    count->add_option("--q", q, "divisor of p-1 selecting the coprimality constraint");

    auto* certify = app.add_subcommand(
        "certify", "evaluate the hypothesis conditions and count for one prime");
    certify->add_option("--p", p, "odd prime modulus")->required();
    certify->add_option("--q", q, "divisor of p-1");
    certify->add_option("--epsilon", epsilon_text, "epsilon in [1/11, 1/2), e.g. 1/11");

    auto* thresholds = app.add_subcommand(
        "thresholds", "size threshold implied by a given epsilon");
    thresholds->add_option("--epsilon", epsilon_text, "epsilon in [1/11, 1/2)");

    auto* scan = app.add_subcommand(
        "scan", "certify every prime in a range, optionally in parallel");
    scan->add_option("--pmin", pmin, "lower end of the prime range")->required();
    scan->add_option("--pmax", pmax, "upper end of the prime range")->required();
    scan->add_option("--q", q, "required divisor of p-1; primes not matching are skipped");
    scan->add_option("--epsilon", epsilon_text, "epsilon in [1/11, 1/2)");
    scan->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 64u));
    scan->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    scan->add_option("--out", out_path, "write output atomically to this file");

    auto* verify_cmd = app.add_subcommand(
        "verify", "run one of the built-in verification suites");
    verify_cmd
        ->add_option("--suite", suite,
                     "lemma21|lemma22|lemma24|polya|chain|lps|formula")
        ->required()
        ->check(CLI::IsMember({"lemma21", "lemma22", "lemma24", "polya", "chain",
                               "lps", "formula"}));
    auto* pmax_opt = verify_cmd->add_option("--pmax", verify_pmax,
                                            "override the suite's default sweep bound");

    auto* fixed_point = app.add_subcommand(
        "fixed-point", "construct a discrete-log fixed point from a qnrnp element");
    fixed_point->add_option("--p", p, "odd prime modulus")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        Limits lim = resolve_limits();
        if (classify->parsed()) return cmd_classify(p, lim, out);
        if (count->parsed()) return cmd_count(p, q, lim, out);
        if (certify->parsed())
            return cmd_certify(p, q, parse_rational(epsilon_text), lim, out);
        if (thresholds->parsed()) return cmd_thresholds(parse_rational(epsilon_text), out);
        if (scan->parsed())
            return cmd_scan(pmin, pmax, q, parse_rational(epsilon_text), jobs, format,
                            out_path, lim, out);
        if (verify_cmd->parsed())
            return cmd_verify(suite, verify_pmax, pmax_opt->count() > 0, out);
        if (fixed_point->parsed()) return cmd_fixed_point(p, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PrecisionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(int argc, const char* const* argv) {
    return run(argc, argv, std::cout, std::cerr);
}

} // namespace qnrnp::cli
