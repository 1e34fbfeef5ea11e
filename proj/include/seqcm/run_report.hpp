#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "seqcm/problem.hpp"
#include "seqcm/report.hpp"

namespace seqcm {

inline constexpr const char* kEngineVersion = "seqcm-lab 0.1.0";

enum ExitCode : int { kConsistent = 0, kCheckFailed = 1, kInconclusive = 2, kInputError = 3 };

/// Result of one subcommand. `sections` holds the structured results keyed by
/// section name, in the order they were produced.
struct RunReport {
  std::string engine = kEngineVersion;
  std::string command;
  ProblemSpec problem;
  nlohmann::ordered_json sections = nlohmann::ordered_json::object();
  std::vector<CheckReport> checks;
  std::optional<std::string> error;
  Status status = Status::NotApplicable;
  int exit_code = kConsistent;

  /// Sets status and exit_code from the checks (an error keeps its code).
  void finalize();
};

int exit_code_for(Status overall);

nlohmann::ordered_json report_to_json(const RunReport& report);
/// Inverse of report_to_json.
RunReport report_from_json(const nlohmann::ordered_json& j);
/// Pretty-printed JSON, two-space indent, trailing newline.
std::string report_to_string(const RunReport& report);

std::string render_text(const RunReport& report);

}  // namespace seqcm
