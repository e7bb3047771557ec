#ifndef DYSON_HARNESS_REPORT_HPP
#define DYSON_HARNESS_REPORT_HPP

#include "dyson/harness/sweep.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace dyson::harness {

void to_json(nlohmann::json& j, const CaseParams& p);
void from_json(const nlohmann::json& j, CaseParams& p);
void to_json(nlohmann::json& j, const VerificationCase& c);
void from_json(const nlohmann::json& j, VerificationCase& c);
void to_json(nlohmann::json& j, const SweepReport& r);
void from_json(const nlohmann::json& j, SweepReport& r);

std::string emit(const SweepReport& r);
SweepReport parse_report(const std::string& text);

/// Problems with the shape of a report document; empty when it conforms.
std::vector<std::string> schema_errors(const nlohmann::json& j);

/// UTC, ISO 8601 to the second.
std::string utc_timestamp();

} // namespace dyson::harness

#endif
