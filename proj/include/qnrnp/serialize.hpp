#pragma once

#include <string>

#include <json.hpp>

#include "qnrnp/fixedpoint.hpp"
#include "qnrnp/theorem.hpp"
#include "qnrnp/verify.hpp"

namespace qnrnp::serialize {

// Ordered JSON everywhere: key order is part of the byte-determinism
// contract for CLI output.
using json = nlohmann::ordered_json;

json to_json(const theorem::CountReport& r);
json to_json(const theorem::TheoremCertificate& c);
json to_json(const theorem::ThresholdInfo& t);
json to_json(const theorem::ChainLink& l);
json to_json(const theorem::ChainReport& r);
json to_json(const theorem::ScanSummary& s);
json to_json(const fixedpoint::FixedPointResult& r);
json to_json(const verify::SuiteItem& i);
json to_json(const verify::SuiteReport& r);

theorem::CountReport count_report_from_json(const json& j);
theorem::TheoremCertificate certificate_from_json(const json& j);
theorem::ThresholdInfo threshold_from_json(const json& j);
theorem::ChainReport chain_from_json(const json& j);
theorem::ScanSummary scan_summary_from_json(const json& j);
fixedpoint::FixedPointResult fixed_point_from_json(const json& j);
verify::SuiteReport suite_report_from_json(const json& j);

// CSV face of a certificate stream. Booleans print as true/false, an absent
// witness is an empty cell.
std::string csv_header();
std::string csv_row(const theorem::TheoremCertificate& c);

} // namespace qnrnp::serialize
