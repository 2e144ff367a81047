#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace invlim {

enum class CheckStatus { Pass, Fail, Skipped };

/* One verified property. The counterexample is free-form JSON, present
   only on failure, with enough data to replay the offending case. */
struct Check {
  std::string name;
  std::string paper_anchor;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json counterexample;

  bool operator==(const Check& o) const = default;
};

Check pass_check(std::string name, std::string anchor);
Check fail_check(std::string name, std::string anchor,
                 nlohmann::json counterexample);
Check skip_check(std::string name, std::string anchor);

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  std::vector<Check> checks;
  /* command-specific payload: result documents, transcripts, chains */
  nlohmann::json artifact;

  bool all_pass() const;
  std::size_t fail_count() const;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j, const std::string& path);

  /* one line per check plus a summary, for --output text */
  std::string to_text() const;
};

}  // namespace invlim
