// SPDX-License-Identifier: Apache-2.0
//
// cnp-kit: Pick interpolation, kernel geometry and removability experiments
// over JSON problem instances.

#include <CLI11.hpp>
#include <iostream>

#include "cnp/cli/runner.hpp"

namespace {

struct CommonArgs {
  std::vector<std::string> files;
  cnp::cli::RunOptions options;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool want_files = true) {
  if (want_files) {
    cmd->add_option("files", args.files, "instance JSON files");
  }
  cmd->add_option("--tol", args.options.tol,
                  "tolerance override for the instance");
  cmd->add_option("--format", args.options.format,
                  "report format: json (default) or csv");
  cmd->add_option("--jobs", args.options.jobs,
                  "run up to N instances concurrently");
  cmd->add_option("--seed", args.options.seed,
                  "override generator seeds (recorded in the report)");
}

int dispatch(const std::string& kind, const CommonArgs& args) {
  return cnp::cli::run_files(kind, args.files, args.options, std::cout,
                             std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complete Nevanlinna-Pick kernel geometry toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {
      "pick", "dk", "embed", "dominate", "blaschke", "capacity", "removable"};
  std::map<std::string, CommonArgs> args;
  for (const std::string& kind : kinds) {
    auto* cmd = app.add_subcommand(kind, "run " + kind + " instances");
    add_common(cmd, args[kind]);
  }

  // extremal also accepts direct flags instead of an instance file.
  CommonArgs extremal_args;
  std::string extremal_kernel = "szego";
  std::string extremal_base, extremal_x;
  auto* extremal = app.add_subcommand("extremal",
                                      "two-point extremal value at a base");
  add_common(extremal, extremal_args);
  extremal->add_option("--kernel", extremal_kernel,
                       "kernel for the flag form (szego)");
  extremal->add_option("--base", extremal_base,
                       "base point as a complex literal, e.g. 0+0i");
  extremal->add_option("--x", extremal_x, "evaluation point, e.g. 0.5+0i");

  auto* experiment = app.add_subcommand("experiment", "experiment harnesses");
  experiment->require_subcommand(1);
  CommonArgs remove_args, weak_args;
  add_common(experiment->add_subcommand(
                 "remove", "puncture-blindness removability experiment"),
             remove_args);
  add_common(experiment->add_subcommand(
                 "weak-hardy", "minimal norm vs sup norm on growing samples"),
             weak_args);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const std::string& kind : kinds) {
      if (app.get_subcommand(kind)->parsed()) {
        return dispatch(kind, args[kind]);
      }
    }
    if (extremal->parsed()) {
      if (extremal_args.files.empty()) {
        if (extremal_base.empty() || extremal_x.empty()) {
          std::cerr << "error: extremal needs an instance file or --base/--x"
                    << "\n";
          return 2;
        }
        if (extremal_kernel != "szego") {
          std::cerr << "error: the flag form supports --kernel szego\n";
          return 2;
        }
        const cnp::Complex base =
            cnp::cli::parse_complex_literal(extremal_base);
        const cnp::Complex x = cnp::cli::parse_complex_literal(extremal_x);
        cnp::cli::Json instance;
        instance["schema_version"] = 1;
        instance["kind"] = "extremal";
        instance["payload"]["kernel"]["variant"] = "szego";
        instance["payload"]["points"] = {
            cnp::cli::complex_to_json(base), cnp::cli::complex_to_json(x)};
        instance["payload"]["base"] = 0;
        instance["payload"]["x"] = 1;
        if (extremal_args.options.tol) {
          instance["payload"]["tol"] = *extremal_args.options.tol;
        }
        const auto inst = cnp::cli::load_instance(instance.dump());
        const auto report =
            cnp::cli::run_instance(inst, extremal_args.options);
        std::cout << cnp::cli::serialize_report(report);
        return cnp::cli::exit_code_for(report);
      }
      return dispatch("extremal", extremal_args);
    }
    if (experiment->parsed()) {
      if (experiment->get_subcommand("remove")->parsed()) {
        return dispatch("remove-experiment", remove_args);
      }
      return dispatch("weak-hardy-experiment", weak_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
