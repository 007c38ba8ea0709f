// Copyright 2026 The edrlab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edr/model_io.hpp"
#include "edr/report_io.hpp"
#include "edr/suite.hpp"

namespace {

using namespace edr;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::vector<RelationId> parse_relations(const std::vector<std::string>& names) {
  if (names.empty()) {
    return all_relation_ids();
  }
  std::vector<RelationId> ids;
  for (const std::string& name : names) {
    const auto id = parse_relation_id(name);
    if (!id) {
      throw ModelFileError("unknown relation id '" + name + "'");
    }
    ids.push_back(*id);
  }
  return ids;
}

LoadedModel load_with_overrides(const std::string& source,
                                const std::string& a_name,
                                const std::string& b_name,
                                const std::string& rho_name) {
  LoadedModel model = load_model(source);
  const Eigen::Index dim = model.process.sys_dim();
  if (!a_name.empty()) model.a = observable_from_name(a_name, dim);
  if (!b_name.empty()) model.b = observable_from_name(b_name, dim);
  if (!rho_name.empty()) model.rho = density_from_name(rho_name, dim);
  return model;
}

void write_or_print(const ReportDocument& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.json_text << "\n" << report.csv_text;
    return;
  }
  std::ofstream json_out(out_path + ".json");
  std::ofstream csv_out(out_path + ".csv");
  if (!json_out || !csv_out) {
    throw ModelFileError("cannot write report to '" + out_path + "'");
  }
  json_out << report.json_text << "\n";
  csv_out << report.csv_text;
  std::cout << "wrote " << out_path << ".json and " << out_path << ".csv\n";
}

int cmd_compute(const std::string& source, const std::string& a_name,
                const std::string& b_name, const std::string& rho_name,
                const std::string& out_path) {
  const LoadedModel model =
      load_with_overrides(source, a_name, b_name, rho_name);
  const JointModel joint = to_joint_model(model.process, model.b);
  const MomentSet m = moments(joint, model.a, model.b, model.rho);
  const BoundPair bp = bound_pair(model.a, model.b, model.rho);
  const ReportDocument report = make_report(m, bp, {});
  write_or_print(report, out_path);
  return kExitOk;
}

int cmd_verify(const std::string& source, const std::string& a_name,
               const std::string& b_name, const std::string& rho_name,
               const std::vector<std::string>& relation_names,
               double tolerance, const std::string& out_path) {
  const LoadedModel model =
      load_with_overrides(source, a_name, b_name, rho_name);
  const std::vector<RelationId> ids = parse_relations(relation_names);
  const std::vector<RelationReport> reports = evaluate_all(
      model.process, model.a, model.b, model.rho, ids, tolerance);

  const JointModel joint = to_joint_model(model.process, model.b);
  const MomentSet m = moments(joint, model.a, model.b, model.rho);
  const BoundPair bp = bound_pair(model.a, model.b, model.rho);
  write_or_print(make_report(m, bp, reports), out_path);

  bool any_violation = false;
  for (const RelationReport& report : reports) {
    if (!report.preconditions_met) {
      std::cout << "skipped " << to_string(report.id) << ": "
                << report.diagnostic << "\n";
      continue;
    }
    if (!report.satisfied) {
      std::cout << (counts_toward_status(report.id) ? "VIOLATED "
                                                    : "comparator violated ")
                << to_string(report.id)
                << " (residual " << format_17(report.residual) << ")\n";
      if (counts_toward_status(report.id)) {
        any_violation = true;
      }
    }
  }
  return any_violation ? kExitViolation : kExitOk;
}

int cmd_sweep(double theta_min, double theta_max, std::size_t steps,
              const std::string& rho_name,
              const std::vector<std::string>& relation_names,
              const std::string& out_path) {
  const DensityOperator rho =
      rho_name.empty() ? DensityOperator::maximally_mixed(2)
                       : density_from_name(rho_name, 2);
  const std::vector<RelationId> ids =
      relation_names.empty() ? std::vector<RelationId>{}
                             : parse_relations(relation_names);
  const SweepResult result = sweep(theta_min, theta_max, steps, rho, ids);
  const std::string csv = sweep_csv(result, ids);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw ModelFileError("cannot write sweep CSV to '" + out_path + "'");
    }
    out << csv;
    std::cout << "wrote " << out_path << " (" << result.grid.size()
              << " rows), min |circle residual| = "
              << format_17(result.min_abs_circle_residual) << " at theta = "
              << format_17(result.argmin_theta) << "\n";
  }
  return kExitOk;
}

int cmd_spin_demo(std::size_t steps) {
  const DensityOperator rho = DensityOperator::maximally_mixed(2);
  const SweepResult result =
      sweep(0.0, std::numbers::pi / 4.0, steps, rho, {});
  std::cout << "theta        eps^2        eta^2        circle residual\n";
  for (const SweepPoint& point : result.grid) {
    std::printf("%-12.6f %-12.9f %-12.9f %.3e\n", point.theta,
                point.eps * point.eps, point.eta * point.eta,
                point.circle_residual);
  }
  std::cout << "min |circle residual| = "
            << format_17(result.min_abs_circle_residual)
            << " at theta = " << format_17(result.argmin_theta) << "\n";
  return kExitOk;
}

int cmd_suite(std::uint64_t seed, std::uint64_t draws) {
  const std::vector<CriterionResult> results = run_acceptance_suite(seed);
  print_suite_results(results, std::cout);
  bool ok = all_passed(results);

  // Optional tightness probe: how closely random models approach the
  // binary mixed bound, and how the breakable form fares in the scenario
  // that defeats it.
  if (draws > 0) {
    const SearchResult tight = random_model_search(
        2, 2, draws, seed, RelationId::MIXED_BINARY);
    std::cout << "search MIXED_BINARY: best residual "
              << format_17(tight.best_residual) << " (draw "
              << tight.best_draw << " of " << draws << ")\n";
    if (tight.best_residual < -kDefaultResidualTol) {
      std::cout << "search MIXED_BINARY: FAILED (residual below tolerance)\n";
      ok = false;
    }
    const SearchScenario scenario{pauli_z(), pauli_x(),
                                  DensityOperator::qubit_bloch(0.0, 1.0, 0.0)};
    const SearchResult broken = random_model_search(
        2, 2, draws, seed, RelationId::HEISENBERG_EDR, scenario);
    std::cout << "search HEISENBERG_EDR at (Z, X, (I+Y)/2): best residual "
              << format_17(broken.best_residual) << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "edrlab: error-disturbance quantities, commutator lower bounds, and "
      "uncertainty-relation verification for finite-dimensional measurement "
      "models"};
  app.require_subcommand(1);

  std::string model_source;
  std::string a_name, b_name, rho_name, out_path;
  std::vector<std::string> relation_names;
  double tolerance = kDefaultResidualTol;
  double theta_min = 0.0;
  double theta_max = std::numbers::pi / 4.0;
  std::size_t steps = 101;
  std::uint64_t seed = kSuiteDefaultSeed;

  CLI::App* compute =
      app.add_subcommand("compute", "moments and bounds for a model");
  compute->add_option("--model", model_source,
                      "model file or preset spin:theta=<value>")
      ->required();
  compute->add_option("--a", a_name, "override observable A by Pauli name");
  compute->add_option("--b", b_name, "override observable B by Pauli name");
  compute->add_option("--rho", rho_name,
                      "override rho (maximally_mixed or bloch:x,y,z)");
  compute->add_option("--out", out_path, "write <out>.json and <out>.csv");

  CLI::App* verify =
      app.add_subcommand("verify", "evaluate relations; exit 1 on violation");
  verify->add_option("--model", model_source,
                     "model file or preset spin:theta=<value>")
      ->required();
  verify->add_option("--a", a_name, "override observable A by Pauli name");
  verify->add_option("--b", b_name, "override observable B by Pauli name");
  verify->add_option("--rho", rho_name,
                     "override rho (maximally_mixed or bloch:x,y,z)");
  verify->add_option("--relations", relation_names,
                     "relation ids to check (default: all)")
      ->delimiter(',');
  verify->add_option("--tolerance", tolerance, "residual tolerance");
  verify->add_option("--out", out_path, "write <out>.json and <out>.csv");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "spin-family theta sweep to CSV");
  sweep_cmd->add_option("--min", theta_min, "start angle (radians)");
  sweep_cmd->add_option("--max", theta_max, "end angle (radians)");
  sweep_cmd->add_option("--steps", steps, "grid size (>= 2)");
  sweep_cmd->add_option("--rho", rho_name,
                        "rho preset (maximally_mixed or bloch:x,y,z)");
  sweep_cmd->add_option("--relations", relation_names,
                        "residual columns to include")
      ->delimiter(',');
  sweep_cmd->add_option("--out", out_path, "CSV output path");

  CLI::App* demo = app.add_subcommand(
      "spin-demo", "print the theta grid and circle residuals");
  demo->add_option("--steps", steps, "grid size (>= 2)");

  std::uint64_t draws = 0;
  CLI::App* suite = app.add_subcommand(
      "suite", "run the verification battery, one pass/fail line each");
  suite->add_option("--seed", seed, "seed for the randomized criteria");
  suite->add_option("--draws", draws,
                    "extra random-search tightness probe with this many draws");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      return cmd_compute(model_source, a_name, b_name, rho_name, out_path);
    }
    if (verify->parsed()) {
      return cmd_verify(model_source, a_name, b_name, rho_name, relation_names,
                        tolerance, out_path);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(theta_min, theta_max, steps, rho_name, relation_names,
                       out_path);
    }
    if (demo->parsed()) {
      return cmd_spin_demo(steps);
    }
    if (suite->parsed()) {
      return cmd_suite(seed, draws);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
