#include "invlim/report.hpp"

#include <sstream>

#include "invlim/errors.hpp"
#include "invlim/json_io.hpp"

namespace invlim {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  throw error("unreachable check status");
}

CheckStatus status_from(const std::string& s, const std::string& path) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw parse_error(path, "unknown status \"" + s + "\"");
}

}  // namespace

Check pass_check(std::string name, std::string anchor) {
  return Check{std::move(name), std::move(anchor), CheckStatus::Pass, {}};
}

Check fail_check(std::string name, std::string anchor,
                 nlohmann::json counterexample) {
  return Check{std::move(name), std::move(anchor), CheckStatus::Fail,
               std::move(counterexample)};
}

Check skip_check(std::string name, std::string anchor) {
  return Check{std::move(name), std::move(anchor), CheckStatus::Skipped, {}};
}

bool Report::all_pass() const {
  for (const Check& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

std::size_t Report::fail_count() const {
  std::size_t n = 0;
  for (const Check& c : checks)
    if (c.status == CheckStatus::Fail) ++n;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["seed"] = seed;
  j["elapsed_ms"] = elapsed_ms;
  nlohmann::json cs = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["paper_anchor"] = c.paper_anchor;
    cj["status"] = status_name(c.status);
    if (c.status == CheckStatus::Fail) cj["counterexample"] = c.counterexample;
    cs.push_back(std::move(cj));
  }
  j["checks"] = std::move(cs);
  j["all_pass"] = all_pass();
  if (!artifact.is_null()) j["artifact"] = artifact;
  return j;
}

Report Report::from_json(const nlohmann::json& j, const std::string& path) {
  Report r;
  r.command = json_string(json_field(j, "command", path), path + ".command");
  const nlohmann::json& sj = json_field(j, "seed", path);
  if (!sj.is_number_unsigned() && !sj.is_number_integer())
    throw parse_error(path + ".seed", "expected integer");
  r.seed = sj.get<std::uint64_t>();
  r.elapsed_ms = json_int(json_field(j, "elapsed_ms", path),
                          path + ".elapsed_ms");
  const nlohmann::json& cs = json_field(j, "checks", path);
  if (!cs.is_array()) throw parse_error(path + ".checks", "expected array");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string cp = path + ".checks[" + std::to_string(i) + "]";
    const nlohmann::json& cj = cs[i];
    Check c;
    c.name = json_string(json_field(cj, "name", cp), cp + ".name");
    c.paper_anchor = json_string(json_field(cj, "paper_anchor", cp),
                                 cp + ".paper_anchor");
    c.status = status_from(json_string(json_field(cj, "status", cp),
                                       cp + ".status"),
                           cp + ".status");
    if (cj.contains("counterexample")) c.counterexample = cj["counterexample"];
    r.checks.push_back(std::move(c));
  }
  if (j.contains("artifact")) r.artifact = j["artifact"];
  return r;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "  seed: " << seed << "\n";
  for (const Check& c : checks) {
    out << "  [" << status_name(c.status) << "] " << c.name
        << "  (" << c.paper_anchor << ")\n";
    if (c.status == CheckStatus::Fail && !c.counterexample.is_null())
      out << "    counterexample: " << c.counterexample.dump() << "\n";
  }
  out << (all_pass() ? "all checks passed" : "FAILURES present") << "  ("
      << checks.size() << " checks, " << fail_count() << " failed, "
      << elapsed_ms << " ms)\n";
  return out.str();
}

}  // namespace invlim
