#include "dyson/harness/report.hpp"

#include <chrono>
#include <ctime>

namespace dyson::harness {

using nlohmann::json;

void to_json(json& j, const CaseParams& p) {
  j = json{{"n", p.n}, {"a", p.a}};
  if (!p.indices.empty()) j["indices"] = p.indices;
  if (p.alpha) j["alpha"] = *p.alpha;
  if (p.beta) j["beta"] = *p.beta;
}

void from_json(const json& j, CaseParams& p) {
  p = {};
  j.at("n").get_to(p.n);
  j.at("a").get_to(p.a);
  if (j.contains("indices")) j.at("indices").get_to(p.indices);
  if (j.contains("alpha")) p.alpha = j.at("alpha").get<int>();
  if (j.contains("beta")) p.beta = j.at("beta").get<int>();
}

void to_json(json& j, const VerificationCase& c) {
  j = json{{"family", c.family}, {"params", c.params}, {"lhs", c.lhs},
           {"rhs", c.rhs},       {"equal", c.equal},   {"micros", c.micros}};
}

void from_json(const json& j, VerificationCase& c) {
  j.at("family").get_to(c.family);
  j.at("params").get_to(c.params);
  j.at("lhs").get_to(c.lhs);
  j.at("rhs").get_to(c.rhs);
  j.at("equal").get_to(c.equal);
  j.at("micros").get_to(c.micros);
}

void to_json(json& j, const SweepReport& r) {
  j = json{{"version", r.version},
           {"timestamp", r.timestamp},
           {"grid", r.grid},
           {"cases", r.cases},
           {"counts", {{"pass", r.counts.pass}, {"fail", r.counts.fail}}},
           {"total_micros", r.total_micros}};
}

void from_json(const json& j, SweepReport& r) {
  j.at("version").get_to(r.version);
  j.at("timestamp").get_to(r.timestamp);
  j.at("grid").get_to(r.grid);
  j.at("cases").get_to(r.cases);
  j.at("counts").at("pass").get_to(r.counts.pass);
  j.at("counts").at("fail").get_to(r.counts.fail);
  j.at("total_micros").get_to(r.total_micros);
}

std::string emit(const SweepReport& r) { return json(r).dump(2) + "\n"; }

SweepReport parse_report(const std::string& text) { return json::parse(text).get<SweepReport>(); }

std::vector<std::string> schema_errors(const json& j) {
  std::vector<std::string> errs;
  auto need = [&errs](const json& obj, const char* key, auto pred, const char* what) {
    if (!obj.is_object() || !obj.contains(key))
      errs.push_back(std::string("missing ") + key);
    else if (!pred(obj.at(key)))
      errs.push_back(std::string(key) + " is not " + what);
  };
  auto is_str = [](const json& v) { return v.is_string(); };
  auto is_uint = [](const json& v) { return v.is_number_unsigned(); };
  auto is_int = [](const json& v) { return v.is_number_integer(); };

  if (!j.is_object()) return {"report is not an object"};
  need(j, "version", is_str, "a string");
  need(j, "timestamp", is_str, "a string");
  need(j, "grid", is_str, "a string");
  need(j, "total_micros", is_int, "an integer");
  need(j, "counts", [](const json& v) { return v.is_object(); }, "an object");
  need(j, "cases", [](const json& v) { return v.is_array(); }, "an array");
  if (!errs.empty()) return errs;
  need(j["counts"], "pass", is_uint, "a count");
  need(j["counts"], "fail", is_uint, "a count");
  if (!errs.empty()) return errs;

  std::size_t pass = 0, fail = 0;
  for (const auto& c : j["cases"]) {
    need(c, "family", is_str, "a string");
    need(c, "params", [](const json& v) { return v.is_object() && v.contains("n") && v.contains("a"); },
         "an object with n and a");
    need(c, "lhs", is_str, "a string");
    need(c, "rhs", is_str, "a string");
    need(c, "equal", [](const json& v) { return v.is_boolean(); }, "a boolean");
    need(c, "micros", is_int, "an integer");
    if (!errs.empty()) return errs;
    const bool eq = c["equal"].get<bool>();
    if (eq != (c["lhs"] == c["rhs"])) errs.push_back("equal disagrees with lhs/rhs for a " +
                                                     c["family"].get<std::string>() + " case");
    (eq ? pass : fail) += 1;
  }
  if (pass != j["counts"]["pass"].get<std::size_t>() || fail != j["counts"]["fail"].get<std::size_t>())
    errs.push_back("counts disagree with cases");
  return errs;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace dyson::harness
