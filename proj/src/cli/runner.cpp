// SPDX-License-Identifier: Apache-2.0
#include "cnp/cli/runner.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "cnp/capacity.hpp"
#include "cnp/cli/generators.hpp"
#include "cnp/pick.hpp"
#include "cnp/realization.hpp"

namespace cnp::cli {

namespace {

double payload_tol(const Instance& inst, const RunOptions& opt,
                   double fallback) {
  if (opt.tol) return *opt.tol;
  return inst.payload.value("tol", fallback);
}

Json run_pick(const Instance& inst, const RunOptions& opt) {
  const Json& p = inst.payload;
  const KernelSpec spec = parse_kernel(p["kernel"]);
  PointSet pts = parse_points(p["points"], spec);

  const bool scalar = p.contains("targets");
  if (scalar == p.contains("block_targets")) {
    throw SchemaError(
        "input: pick requires exactly one of 'targets' or 'block_targets'");
  }
  InterpolationProblem problem = [&] {
    if (scalar) {
      std::vector<Complex> targets;
      for (const Json& t : p["targets"]) targets.push_back(parse_complex(t));
      return InterpolationProblem::scalar(spec, std::move(pts),
                                          std::move(targets));
    }
    std::vector<Eigen::MatrixXcd> blocks;
    for (const Json& b : p["block_targets"]) {
      const Eigen::Index m = static_cast<Eigen::Index>(b.size());
      Eigen::MatrixXcd w(m, m);
      for (Eigen::Index r = 0; r < m; ++r) {
        if (static_cast<Eigen::Index>(b[r].size()) != m) {
          throw SchemaError("input: target blocks must be square");
        }
        for (Eigen::Index c = 0; c < m; ++c) {
          w(r, c) = parse_complex(b[static_cast<std::size_t>(r)]
                                      [static_cast<std::size_t>(c)]);
        }
      }
      blocks.push_back(std::move(w));
    }
    return InterpolationProblem::blocks(spec, std::move(pts),
                                        std::move(blocks));
  }();

  const double tol = payload_tol(inst, opt, 1e-9);
  const PickResult r = min_multiplier_norm(problem, tol);
  Json result;
  result["feasible"] = r.feasible;
  result["min_norm"] = r.min_norm;
  result["certificate"] = r.certificate;
  result["iterations"] = r.iterations;
  return make_report(inst, std::move(result), nullptr, std::nullopt,
                     std::nullopt, tol);
}

Json run_extremal(const Instance& inst, const RunOptions& opt) {
  const Json& p = inst.payload;
  const KernelSpec spec = parse_kernel(p["kernel"]);
  const PointSet pts = parse_points(p["points"], spec);
  const double tol = payload_tol(inst, opt, 1e-9);
  const ExtremalResult r =
      extremal_value(spec, pts, p["base"].get<std::size_t>(),
                     p["x"].get<std::size_t>(), tol);
  Json result;
  result["value"] = r.value;
  result["closed_form"] = r.closed_form;
  result["gap"] = r.gap;
  result["iterations"] = r.iterations;
  return make_report(inst, std::move(result), nullptr, std::nullopt,
                     std::nullopt, tol);
}

Json run_dk(const Instance& inst, const RunOptions&) {
  const Json& p = inst.payload;
  const KernelSpec spec = parse_kernel(p["kernel"]);
  const PointSet pts = parse_points(p["points"], spec);
  const HermitianMatrix g = gram(spec, pts);
  Json matrix = Json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      row.push_back(dk_from_gram(g, i, j));
    }
    matrix.push_back(std::move(row));
  }
  Json result;
  result["dk"] = std::move(matrix);
  return make_report(inst, std::move(result));
}

Json run_embed(const Instance& inst, const RunOptions& opt) {
  const Json& p = inst.payload;
  const KernelSpec spec = parse_kernel(p["kernel"]);
  const PointSet pts = parse_points(p["points"], spec);
  const double tol = payload_tol(inst, opt, kDefaultTol);
  const EmbeddingRealization r =
      realize(spec, pts, p["base"].get<std::size_t>(), tol);

  Json rows = Json::array();
  for (Eigen::Index i = 0; i < r.b.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < r.b.cols(); ++k) {
      row.push_back(complex_to_json(r.b(i, k)));
    }
    rows.push_back(std::move(row));
  }
  Json spectrum = Json::array();
  for (Eigen::Index k = 0; k < r.spectrum.size(); ++k) {
    spectrum.push_back(r.spectrum(k));
  }
  Json result;
  result["d"] = r.d;
  result["base"] = r.base;
  result["b"] = std::move(rows);
  result["reconstruction_error"] = r.reconstruction_error;
  result["spectrum"] = std::move(spectrum);
  return make_report(inst, std::move(result), nullptr, std::nullopt,
                     std::nullopt, tol);
}

Json run_dominate(const Instance& inst, const RunOptions& opt) {
  const Json& p = inst.payload;
  const ResolvedSample sample = resolve_sample(p["sample"], opt.seed);
  std::vector<TestFunction> fns;
  Json names = Json::array();
  for (const Json& f : p["functions"]) {
    fns.push_back(parse_test_function(f));
    names.push_back(fns.back().describe());
  }
  const DiskGrid grid =
      p.contains("grid") ? parse_grid(p["grid"]) : DiskGrid{};
  const double tol = payload_tol(inst, opt, 0.02);

  const DiskSample s = DiskSample::of(sample.points);
  const std::vector<double> ratios = dominating_ratios(s, fns, grid);
  double min_ratio = 1.0;
  for (const double r : ratios) min_ratio = std::min(min_ratio, r);

  Json result;
  result["functions"] = std::move(names);
  result["ratios"] = ratios;
  result["min_ratio"] = min_ratio;
  // A finite family only ever certifies failure; the positive direction is
  // reported as consistency, never as a claim.
  result["classification"] = min_ratio >= 1.0 - tol
                                 ? "consistent-with-dominating"
                                 : "not-dominated-by-family-at-resolution";
  Json grid_used;
  grid_used["radial"] = grid.radial;
  grid_used["angular"] = grid.angular;
  grid_used["outer_radius"] = grid.outer_radius;
  result["grid"] = std::move(grid_used);
  return make_report(inst, std::move(result), nullptr, std::nullopt,
                     sample.seed, tol);
}

Json run_blaschke(const Instance& inst, const RunOptions&) {
  const Json& p = inst.payload;
  const bool product = p.contains("zeros") && p.contains("at");
  const bool sum = p.contains("sample");
  if (!product && !sum) {
    throw SchemaError(
        "input: blaschke requires 'zeros' + 'at' or a 'sample'");
  }
  Json result;
  if (product) {
    std::vector<Complex> zeros;
    for (const Json& z : p["zeros"]) zeros.push_back(parse_complex(z));
    Json values = Json::array();
    for (const Json& z : p["at"]) {
      values.push_back(
          complex_to_json(blaschke_product(zeros, parse_complex(z))));
    }
    result["product_values"] = std::move(values);
  }
  if (sum) {
    const ResolvedSample sample = resolve_sample(p["sample"], std::nullopt);
    std::optional<TailModel> tail;
    if (p["sample"].contains("tail_model")) {
      tail = TailModel{p["sample"]["tail_model"]["c"].get<double>(),
                       p["sample"]["tail_model"]["p"].get<double>()};
    }
    const BlaschkeSum bs = blaschke_sum(DiskSample::of(sample.points, tail));
    Json record;
    record["partial"] = bs.partial;
    record["classification"] =
        bs.classification == BlaschkeClass::divergent    ? "divergent"
        : bs.classification == BlaschkeClass::convergent ? "convergent"
                                                         : "unknown";
    result["sum"] = std::move(record);
  }
  return make_report(inst, std::move(result));
}

Json run_capacity(const Instance& inst, const RunOptions&) {
  const CapacityResult r =
      analytic_capacity(parse_planar_set(inst.payload["set"]));
  Json result;
  result["supported"] = r.supported;
  if (r.supported) {
    result["value"] = r.value;
    result["source"] = r.source == CapacitySource::literature
                           ? "literature"
                           : "removability";
  } else {
    result["upper_bound"] = *r.upper_bound;
  }
  return make_report(inst, std::move(result));
}

Json run_removable(const Instance& inst, const RunOptions&) {
  const std::optional<bool> r =
      is_removable(parse_planar_set(inst.payload["set"]));
  Json result;
  result["supported"] = r.has_value();
  if (r.has_value()) {
    result["removable"] = *r;
  }
  return make_report(inst, std::move(result));
}

Json run_remove_experiment(const Instance& inst, const RunOptions& opt) {
  const RemoveOutcome r =
      remove_experiment(inst.payload, opt.seed, opt.tol);
  Json result;
  result["description"] = "puncture-blindness of finite Pick data";
  return make_report(inst, std::move(result), &r.steps, r.verdict, r.seed,
                     r.tol);
}

Json run_weak_hardy(const Instance& inst, const RunOptions& opt) {
  const WeakHardyOutcome r =
      weak_hardy_experiment(inst.payload, opt.seed, opt.tol);
  Json result;
  result["sup_sample"] = r.sup_sample;
  if (!r.failure_reason.empty()) {
    result["failure_reason"] = r.failure_reason;
  }
  const double tol = opt.tol ? *opt.tol : inst.payload.value("tol", 0.02);
  return make_report(inst, std::move(result), &r.steps, r.verdict, r.seed,
                     tol);
}

}  // namespace

Json run_instance(const Instance& inst, const RunOptions& opt) {
  if (inst.kind == "pick") return run_pick(inst, opt);
  if (inst.kind == "extremal") return run_extremal(inst, opt);
  if (inst.kind == "dk") return run_dk(inst, opt);
  if (inst.kind == "embed") return run_embed(inst, opt);
  if (inst.kind == "dominate") return run_dominate(inst, opt);
  if (inst.kind == "blaschke") return run_blaschke(inst, opt);
  if (inst.kind == "capacity") return run_capacity(inst, opt);
  if (inst.kind == "removable") return run_removable(inst, opt);
  if (inst.kind == "remove-experiment") {
    return run_remove_experiment(inst, opt);
  }
  if (inst.kind == "weak-hardy-experiment") return run_weak_hardy(inst, opt);
  throw SchemaError("input: unknown kind " + inst.kind);
}

int exit_code_for(const Json& report) {
  if (!report.contains("verdict")) return 0;
  return report["verdict"].get<std::string>() == "PASS" ? 0 : 1;
}

int log_level() {
  const char* env = std::getenv("CNP_KIT_LOG");
  if (!env) return 0;
  return std::atoi(env);
}

int run_files(const std::string& expected_kind,
              const std::vector<std::string>& files,
              const RunOptions& options, std::ostream& out,
              std::ostream& err) {
  if (files.empty()) {
    err << "error: no instance files given\n";
    return 2;
  }
  if (options.format != "json" && options.format != "csv") {
    err << "error: unknown format " << options.format << "\n";
    return 2;
  }
  if (options.format == "csv" && files.size() > 1) {
    err << "error: csv output supports a single instance\n";
    return 2;
  }

  struct Slot {
    Json report;
    std::exception_ptr error;
    double millis = 0.0;
  };
  std::vector<Slot> slots(files.size());

  const int jobs =
      std::max(1, std::min<int>(options.jobs,
                                static_cast<int>(files.size())));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      const auto start = std::chrono::steady_clock::now();
      try {
        const Instance inst = load_instance_file(files[i]);
        if (!expected_kind.empty() && inst.kind != expected_kind) {
          throw SchemaError("input: " + files[i] + " has kind " + inst.kind +
                            ", expected " + expected_kind);
        }
        slots[i].report = run_instance(inst, options);
      } catch (...) {
        slots[i].error = std::current_exception();
      }
      slots[i].millis =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - start)
              .count();
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // Aggregate in argument order regardless of completion order.
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!slots[i].error) continue;
    try {
      std::rethrow_exception(slots[i].error);
    } catch (const std::exception& e) {
      err << "error: " << files[i] << ": " << e.what() << "\n";
    }
    return 2;
  }

  int code = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    code = std::max(code, exit_code_for(slots[i].report));
    if (log_level() >= 1) {
      err << "cnp-kit: " << files[i] << " finished in " << slots[i].millis
          << " ms\n";
    }
  }

  try {
    if (options.format == "csv") {
      out << serialize_steps_csv(slots.front().report);
    } else if (files.size() == 1) {
      out << serialize_report(slots.front().report);
    } else {
      Json all = Json::array();
      for (Slot& s : slots) all.push_back(std::move(s.report));
      for (const Json& r : all) validate_report(r);
      out << all.dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace cnp::cli
