// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnp/cli/schema.hpp"

namespace cnp::cli {

struct StepRecord {
  std::size_t n = 0;
  double value = 0.0;
  double oracle = 0.0;
  double gap = 0.0;
};

/// Outcome of the weak-Hardy harness: minimal multiplier norms of the test
/// function's data over nested subsamples are monotone lower bounds whose
/// final gap against the sample sup norm is the reported verdict.
struct WeakHardyOutcome {
  std::vector<StepRecord> steps;
  double sup_sample = 0.0;
  std::string verdict;         // PASS / FAIL
  std::string failure_reason;  // "", "solver-inconsistency", "final-gap"
  std::optional<std::uint64_t> seed;
};

WeakHardyOutcome weak_hardy_experiment(
    const Json& payload, std::optional<std::uint64_t> seed_override,
    std::optional<double> tol_override);

/// Outcome of the puncture-blindness experiment, mapped to step records
/// (value = norm on the punctured domain, oracle = norm on the disk).
struct RemoveOutcome {
  std::vector<StepRecord> steps;
  std::string verdict;  // PASS / FAIL
  double tol = 0.0;
  std::optional<std::uint64_t> seed;
};

RemoveOutcome remove_experiment(const Json& payload,
                                std::optional<std::uint64_t> seed_override,
                                std::optional<double> tol_override);

}  // namespace cnp::cli
