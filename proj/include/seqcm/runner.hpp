#pragma once

#include <string>

#include "seqcm/run_report.hpp"

namespace seqcm {

/// Runs one subcommand on a parsed problem. Never throws for problems with the
/// input or the search: those end up in report.error with exit code 3
/// (input) or 2 (search gave up).
RunReport run(const ProblemSpec& spec, const std::string& command);

}  // namespace seqcm
