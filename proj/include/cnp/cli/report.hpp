// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cnp/cli/experiments.hpp"
#include "cnp/cli/instance.hpp"

namespace cnp::cli {

/// Assemble a report envelope. Wall time is intentionally not part of the
/// serialized report so identical inputs produce byte-identical bytes; the
/// runner logs timing to stderr instead.
Json make_report(const Instance& instance, Json result,
                 const std::vector<StepRecord>* steps = nullptr,
                 const std::optional<std::string>& verdict = std::nullopt,
                 const std::optional<std::uint64_t>& seed = std::nullopt,
                 const std::optional<double>& tol = std::nullopt);

/// Validated, key-sorted, newline-terminated JSON text.
std::string serialize_report(const Json& report);

/// Flat per-step CSV; only reports that carry steps can be rendered.
std::string serialize_steps_csv(const Json& report);

Json complex_to_json(const Complex& z);

}  // namespace cnp::cli
