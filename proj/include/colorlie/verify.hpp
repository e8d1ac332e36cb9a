#pragma once

#include "colorlie/io.hpp"
#include "colorlie/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace colorlie {

inline constexpr const char *report_schema = "colorlie.report/1";

struct SectionResult {
  std::string slug;
  std::string title;
  CheckReport report;
  double seconds = 0;
};

/// Outcome of a CLI command: status is "pass", "fail" or "error".
struct CommandReport {
  std::string command;
  std::string status;
  std::vector<SectionResult> checks;
  json data = json::object();

  bool passed() const;
  /// Sets status from the checks ("pass" iff all passed).
  void settle();
};

json to_json(const CommandReport &r);
/// Inverse of to_json; throws AlgebraError(Parse) on a schema mismatch.
CommandReport command_report_from_json(const json &j);

struct VerifyOptions {
  int n_max = 6;
  std::uint64_t seed = 0;
  /// Directory with sl2_graded.json, sl2c.json and example_triple.json.
  /// Empty means the built-in definitions.
  std::string fixtures_dir;
};

/// Slugs of the verification sections, in run order.
std::vector<std::string> verify_sections();
/// Runs one section; exceptions are turned into failures.
SectionResult run_section(const std::string &slug, const VerifyOptions &options);
/// Runs every section in order.
CommandReport verify_paper(const VerifyOptions &options);

/// One line per section plus a total.
std::string scoreboard(const CommandReport &r);

} // namespace colorlie
