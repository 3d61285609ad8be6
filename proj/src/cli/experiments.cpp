// SPDX-License-Identifier: Apache-2.0
#include "cnp/cli/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "cnp/capacity.hpp"
#include "cnp/cli/generators.hpp"
#include "cnp/cli/instance.hpp"
#include "cnp/pick.hpp"

namespace cnp::cli {

namespace {

std::vector<std::size_t> parse_sizes(const Json& j, std::size_t limit) {
  std::vector<std::size_t> sizes;
  for (const Json& s : j) sizes.push_back(s.get<std::size_t>());
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] > limit) {
      throw SchemaError("input: subsample size exceeds the sample");
    }
    if (k > 0 && sizes[k] <= sizes[k - 1]) {
      throw SchemaError("input: subsample sizes must be strictly increasing");
    }
  }
  return sizes;
}

}  // namespace

WeakHardyOutcome weak_hardy_experiment(
    const Json& payload, std::optional<std::uint64_t> seed_override,
    std::optional<double> tol_override) {
  if (payload["kernel"]["variant"].get<std::string>() != "szego") {
    // An embedding kernel's gram over a finite sample is the Szego gram of
    // its j-image, so the harness supports the Szego form only.
    throw SchemaError(
        "input: weak-hardy-experiment supports the szego kernel");
  }
  const double tol = tol_override ? *tol_override
                                  : payload.value("tol", 0.02);
  if (!(tol > 0.0)) throw SchemaError("input: tolerance must be > 0");

  WeakHardyOutcome out;
  const ResolvedSample sample =
      resolve_sample(payload["sample"], seed_override);
  out.seed = sample.seed;
  const TestFunction fn = parse_test_function(payload["test_function"]);
  const std::vector<std::size_t> sizes =
      parse_sizes(payload["sizes"], sample.points.size());

  for (const Complex a : sample.points) {
    out.sup_sample = std::max(out.sup_sample, std::abs(fn(a)));
  }

  // Nested prefixes of a seeded shuffle: restriction monotonicity then
  // guarantees nondecreasing lower bounds.
  const std::vector<std::size_t> order = shuffled_indices(
      sample.points.size(), sample.seed.value_or(0));

  const KernelSpec szego = KernelSpec::szego();
  for (const std::size_t n : sizes) {
    std::vector<Complex> pts(n);
    std::vector<Complex> targets(n);
    for (std::size_t i = 0; i < n; ++i) {
      pts[i] = sample.points[order[i]];
      targets[i] = fn(pts[i]);
    }
    const PickResult r = min_multiplier_norm(
        InterpolationProblem::scalar(szego, PointSet::disk(pts), targets),
        1e-12);
    StepRecord step;
    step.n = n;
    step.value = r.min_norm;
    step.oracle = out.sup_sample;
    step.gap = std::fabs(step.oracle - step.value);
    out.steps.push_back(step);
  }

  out.verdict = "PASS";
  for (std::size_t k = 1; k < out.steps.size(); ++k) {
    if (out.steps[k].value < out.steps[k - 1].value - 1e-10) {
      out.verdict = "FAIL";
      out.failure_reason = "solver-inconsistency";
      return out;
    }
  }
  if (!(out.steps.back().gap <= tol)) {
    out.verdict = "FAIL";
    out.failure_reason = "final-gap";
  }
  return out;
}

RemoveOutcome remove_experiment(const Json& payload,
                                std::optional<std::uint64_t> seed_override,
                                std::optional<double> tol_override) {
  RemoveOutcome out;
  out.tol = tol_override ? *tol_override : payload.value("tol", 0.0);

  const ResolvedSample sample =
      resolve_sample(payload["sample"], seed_override);
  out.seed = sample.seed;

  std::vector<Complex> punctures;
  for (const Json& p : payload["punctures"]) {
    punctures.push_back(parse_complex(p));
  }
  const TestFunction fn = parse_test_function(payload["test_function"]);

  std::vector<std::size_t> sizes;
  if (payload.contains("sizes")) {
    sizes = parse_sizes(payload["sizes"], sample.points.size());
  }

  const RemovabilityReport report = removability_experiment(
      punctures, DiskSample::of(sample.points), fn, out.tol, sizes);

  for (const RemovabilityStep& s : report.steps) {
    StepRecord step;
    step.n = s.n;
    step.value = s.norm_punctured;
    step.oracle = s.norm_unpunctured;
    step.gap = s.gap;
    out.steps.push_back(step);
  }
  out.verdict = report.pass ? "PASS" : "FAIL";
  return out;
}

}  // namespace cnp::cli
