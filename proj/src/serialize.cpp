#include "qnrnp/serialize.hpp"

#include <sstream>

namespace qnrnp::serialize {

json to_json(const theorem::CountReport& r) {
    json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["n_brute"] = r.n_brute;
    j["n_formula"] = r.n_formula;
    j["main_term"] = r.main_term.to_string();
    j["e_p_actual"] = r.e_p_actual;
    j["e_p_bound"] = r.e_p_bound;
    return j;
}

theorem::CountReport count_report_from_json(const json& j) {
    theorem::CountReport r;
    r.p = j.at("p").get<std::uint64_t>();
    r.q = j.at("q").get<std::uint64_t>();
    r.n_brute = j.at("n_brute").get<std::uint64_t>();
    r.n_formula = j.at("n_formula").get<std::uint64_t>();
    r.main_term = parse_rational(j.at("main_term").get<std::string>());
    r.e_p_actual = j.at("e_p_actual").get<double>();
    r.e_p_bound = j.at("e_p_bound").get<double>();
    return r;
}

json to_json(const theorem::TheoremCertificate& c) {
    json j;
    j["p"] = c.p;
    j["q"] = c.q;
    j["epsilon"] = c.epsilon.to_string();
    j["cond_congruence"] = c.cond_congruence;
    j["cond_size"] = c.cond_size;
    j["cond_ratio"] = c.cond_ratio;
    j["n_p"] = c.n_p;
    if (c.witness)
        j["witness"] = c.witness->value;
    else
        j["witness"] = nullptr;
    return j;
}

theorem::TheoremCertificate certificate_from_json(const json& j) {
    theorem::TheoremCertificate c;
    c.p = j.at("p").get<std::uint64_t>();
    c.q = j.at("q").get<std::uint64_t>();
    c.epsilon = parse_rational(j.at("epsilon").get<std::string>());
    c.cond_congruence = j.at("cond_congruence").get<bool>();
    c.cond_size = j.at("cond_size").get<bool>();
    c.cond_ratio = j.at("cond_ratio").get<bool>();
    c.n_p = j.at("n_p").get<std::uint64_t>();
    if (!j.at("witness").is_null())
        c.witness = residues::UnitResidue{c.p, j.at("witness").get<std::uint64_t>()};
    return c;
}

json to_json(const theorem::ThresholdInfo& t) {
    json j;
    j["epsilon"] = t.epsilon.to_string();
    j["min_loglog"] = t.min_loglog;
    j["min_log"] = t.min_log;
    j["min_p_decimal_digits"] = t.min_p_decimal_digits;
    return j;
}

theorem::ThresholdInfo threshold_from_json(const json& j) {
    theorem::ThresholdInfo t;
    t.epsilon = parse_rational(j.at("epsilon").get<std::string>());
    t.min_loglog = j.at("min_loglog").get<double>();
    t.min_log = j.at("min_log").get<double>();
    t.min_p_decimal_digits = j.at("min_p_decimal_digits").get<std::int64_t>();
    return t;
}

json to_json(const theorem::ChainLink& l) {
    json j;
    j["name"] = l.name;
    j["statement"] = l.statement;
    j["lhs"] = l.lhs;
    j["rhs"] = l.rhs;
    j["margin"] = l.margin;
    j["holds"] = l.holds;
    return j;
}

json to_json(const theorem::ChainReport& r) {
    json j;
    j["links"] = json::array();
    for (const auto& link : r.links) j["links"].push_back(to_json(link));
    j["all_hold"] = r.all_hold;
    return j;
}

theorem::ChainReport chain_from_json(const json& j) {
    theorem::ChainReport r;
    for (const auto& lj : j.at("links")) {
        theorem::ChainLink l;
        l.name = lj.at("name").get<std::string>();
        l.statement = lj.at("statement").get<std::string>();
        l.lhs = lj.at("lhs").get<double>();
        l.rhs = lj.at("rhs").get<double>();
        l.margin = lj.at("margin").get<double>();
        l.holds = lj.at("holds").get<bool>();
        r.links.push_back(l);
    }
    r.all_hold = j.at("all_hold").get<bool>();
    return r;
}

json to_json(const theorem::ScanSummary& s) {
    json j;
    j["primes"] = s.primes;
    j["ratio_true"] = s.ratio_true;
    j["ratio_true_with_qnrnp"] = s.ratio_true_with_qnrnp;
    return j;
}

theorem::ScanSummary scan_summary_from_json(const json& j) {
    theorem::ScanSummary s;
    s.primes = j.at("primes").get<std::uint64_t>();
    s.ratio_true = j.at("ratio_true").get<std::uint64_t>();
    s.ratio_true_with_qnrnp = j.at("ratio_true_with_qnrnp").get<std::uint64_t>();
    return s;
}

json to_json(const fixedpoint::FixedPointResult& r) {
    json j;
    j["p"] = r.p;
    j["x"] = r.x.value;
    j["y"] = r.y;
    j["g"] = r.g.value;
    j["verified"] = r.verified;
    return j;
}

fixedpoint::FixedPointResult fixed_point_from_json(const json& j) {
    fixedpoint::FixedPointResult r;
    r.p = j.at("p").get<std::uint64_t>();
    r.x = residues::UnitResidue{r.p, j.at("x").get<std::uint64_t>()};
    r.y = j.at("y").get<std::uint64_t>();
    r.g = residues::UnitResidue{r.p, j.at("g").get<std::uint64_t>()};
    r.verified = j.at("verified").get<bool>();
    return r;
}

json to_json(const verify::SuiteItem& i) {
    json j;
    j["name"] = i.name;
    j["pass"] = i.pass;
    j["detail"] = i.detail;
    return j;
}

json to_json(const verify::SuiteReport& r) {
    json j;
    j["suite"] = r.suite;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    j["items"] = json::array();
    for (const auto& item : r.items) j["items"].push_back(to_json(item));
    j["all_pass"] = r.all_pass;
    return j;
}

verify::SuiteReport suite_report_from_json(const json& j) {
    verify::SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.checked = j.at("checked").get<std::uint64_t>();
    r.failures = j.at("failures").get<std::uint64_t>();
    for (const auto& ij : j.at("items")) {
        verify::SuiteItem item;
        item.name = ij.at("name").get<std::string>();
        item.pass = ij.at("pass").get<bool>();
        item.detail = ij.at("detail").get<std::string>();
        r.items.push_back(item);
    }
    r.all_pass = j.at("all_pass").get<bool>();
    return r;
}

std::string csv_header() {
    return "p,q,epsilon,cond_congruence,cond_size,cond_ratio,n_p,witness";
}

std::string csv_row(const theorem::TheoremCertificate& c) {
    std::ostringstream os;
    os << c.p << ',' << c.q << ',' << c.epsilon.to_string() << ','
       << (c.cond_congruence ? "true" : "false") << ',' << (c.cond_size ? "true" : "false") << ','
       << (c.cond_ratio ? "true" : "false") << ',' << c.n_p << ',';
    if (c.witness) os << c.witness->value;
    return os.str();
}

} // namespace qnrnp::serialize
