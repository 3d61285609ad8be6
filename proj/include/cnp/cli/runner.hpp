// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cnp/cli/report.hpp"

namespace cnp::cli {

struct RunOptions {
  std::optional<double> tol;   // overrides the payload tolerance
  std::string format = "json";  // "json" or "csv"
  int jobs = 1;
  std::optional<std::uint64_t> seed;  // overrides generator seeds
};

/// Run one validated instance; returns the report. Input or domain problems
/// throw (mapped to exit code 2 by the caller).
Json run_instance(const Instance& instance, const RunOptions& options);

/// Exit code for a finished report: FAIL or INCONCLUSIVE verdicts exit 1.
int exit_code_for(const Json& report);

/// Load and run instance files under a subcommand kind ("" accepts any
/// kind). Reports print to `out` in argument order regardless of --jobs;
/// diagnostics go to `err`. Returns the process exit code: 2 for any input
/// error, else 1 for any FAIL, else 0.
int run_files(const std::string& expected_kind,
              const std::vector<std::string>& files,
              const RunOptions& options, std::ostream& out,
              std::ostream& err);

/// Verbosity from CNP_KIT_LOG (0 when unset or unparsable).
int log_level();

}  // namespace cnp::cli
