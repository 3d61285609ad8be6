// SPDX-License-Identifier: Apache-2.0
#include "cnp/cli/report.hpp"

#include <cstdio>

namespace cnp::cli {

Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Json make_report(const Instance& instance, Json result,
                 const std::vector<StepRecord>* steps,
                 const std::optional<std::string>& verdict,
                 const std::optional<std::uint64_t>& seed,
                 const std::optional<double>& tol) {
  Json report;
  report["schema_version"] = 1;
  report["kind"] = instance.kind;
  report["digest"] = instance.digest;
  report["result"] = std::move(result);
  if (steps) {
    Json arr = Json::array();
    for (const StepRecord& s : *steps) {
      Json step;
      step["n"] = s.n;
      step["value"] = s.value;
      step["oracle"] = s.oracle;
      step["gap"] = s.gap;
      arr.push_back(std::move(step));
    }
    report["steps"] = std::move(arr);
  }
  if (verdict) report["verdict"] = *verdict;
  if (seed) report["seed"] = *seed;
  if (tol) report["tol"] = *tol;
  return report;
}

std::string serialize_report(const Json& report) {
  validate_report(report);
  return report.dump(2) + "\n";
}

std::string serialize_steps_csv(const Json& report) {
  validate_report(report);
  if (!report.contains("steps")) {
    throw SchemaError(
        "input: csv output is limited to reports with per-step records");
  }
  std::string out = "n,value,oracle,gap\n";
  char line[128];
  for (const Json& s : report["steps"]) {
    std::snprintf(line, sizeof(line), "%zu,%.17g,%.17g,%.17g\n",
                  static_cast<std::size_t>(s["n"].get<std::uint64_t>()),
                  s["value"].get<double>(), s["oracle"].get<double>(),
                  s["gap"].get<double>());
    out += line;
  }
  return out;
}

}  // namespace cnp::cli
