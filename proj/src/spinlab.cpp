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

#include "edr/spinlab.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace edr {

MeasuringProcess build_spin_model(const SpinModelParams& params) {
  if (!std::isfinite(params.theta)) {
    throw ValidationError("build_spin_model: theta must be finite");
  }
  const ComplexMatrix z = pauli_z().matrix();
  const ComplexMatrix x = pauli_x().matrix();
  const ComplexMatrix rotation =
      std::cos(params.theta) * z + std::sin(params.theta) * x;

  ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
  cnot(0, 0) = 1.0;  // |0><0| (x) I
  cnot(1, 1) = 1.0;
  cnot(2, 3) = 1.0;  // |1><1| (x) X'
  cnot(3, 2) = 1.0;

  const ComplexMatrix u = cnot * tensor(identity(2), rotation);
  ComplexVector xi(2);
  xi << 1.0, 0.0;
  return MeasuringProcess(2, 2, xi, u, pauli_z());
}

SpinClosedForm closed_form(const SpinModelParams& params) {
  const double s_eps = std::sin(params.theta);
  const double s_eta = std::sin(std::numbers::pi / 4.0 - params.theta);
  return SpinClosedForm{4.0 * s_eps * s_eps, 4.0 * s_eta * s_eta};
}

double state_independence_check(const SpinModelParams& params,
                                std::span<const DensityOperator> states) {
  const MeasuringProcess p = build_spin_model(params);
  const SpinClosedForm expected = closed_form(params);
  const Observable z = pauli_z();
  const Observable x = pauli_x();
  double worst = 0.0;
  for (const DensityOperator& rho : states) {
    const double eps = rms_error(p, z, rho);
    const double eta = rms_disturbance(p, x, rho);
    worst = std::max(worst, std::abs(eps * eps - expected.eps_sq));
    worst = std::max(worst, std::abs(eta * eta - expected.eta_sq));
  }
  return worst;
}

SweepResult sweep(double theta_min, double theta_max, std::size_t steps,
                  const DensityOperator& rho,
                  const std::vector<RelationId>& ids) {
  if (steps < 2) {
    throw ValidationError("sweep: at least 2 steps required");
  }
  const Observable z = pauli_z();
  const Observable x = pauli_x();

  SweepResult result;
  result.grid.reserve(steps);
  result.min_abs_circle_residual = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < steps; ++i) {
    const double theta =
        theta_min + (theta_max - theta_min) *
                        (static_cast<double>(i) / static_cast<double>(steps - 1));
    const MeasuringProcess p = build_spin_model({theta});

    SweepPoint point;
    point.theta = theta;
    point.eps = rms_error(p, z, rho);
    point.eta = rms_disturbance(p, x, rho);
    const double es = point.eps * point.eps;
    const double hs = point.eta * point.eta;
    point.circle_residual = (es - 2.0) * (es - 2.0) + (hs - 2.0) * (hs - 2.0) - 4.0;
    if (!ids.empty()) {
      point.reports = evaluate_all(p, z, x, rho, ids);
    }
    if (std::abs(point.circle_residual) < result.min_abs_circle_residual) {
      result.min_abs_circle_residual = std::abs(point.circle_residual);
      result.argmin_theta = theta;
    }
    result.grid.push_back(std::move(point));
  }
  return result;
}

SearchResult random_model_search(Eigen::Index sys_dim, Eigen::Index probe_dim,
                                 std::uint64_t draws, std::uint64_t seed,
                                 RelationId objective,
                                 const std::optional<SearchScenario>& fixed) {
  if (draws < 1) {
    throw ValidationError("random_model_search: draws must be >= 1");
  }
  const bool binary = objective == RelationId::BRANCIARD_BINARY ||
                      objective == RelationId::MIXED_BINARY ||
                      objective == RelationId::SPIN_CIRCLE ||
                      objective == RelationId::ETRMB;

  SearchResult best;
  best.best_residual = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::uint64_t i = 0; i < draws; ++i) {
    std::mt19937_64 rng = substream(seed, i);
    const MeasuringProcess process =
        random_process(rng, sys_dim, probe_dim, binary);

    RelationReport report;
    if (fixed) {
      report = evaluate(objective, process, fixed->a, fixed->b, fixed->rho);
    } else if (objective == RelationId::SPIN_CIRCLE) {
      if (sys_dim != 2) {
        throw ValidationError(
            "random_model_search: SPIN_CIRCLE draws need a qubit system");
      }
      const BinaryScenario scenario = random_circle_scenario(rng);
      report = evaluate(objective, process, scenario.a, scenario.b,
                        scenario.rho);
    } else if (binary) {
      const BinaryScenario scenario = random_binary_scenario(rng, sys_dim);
      report = evaluate(objective, process, scenario.a, scenario.b,
                        scenario.rho);
    } else {
      const Observable a = random_observable(rng, sys_dim);
      const Observable b = random_observable(rng, sys_dim);
      const DensityOperator rho = random_density(rng, sys_dim);
      report = evaluate(objective, process, a, b, rho);
    }
    if (!report.preconditions_met) {
      continue;
    }
    if (!found || report.residual < best.best_residual) {
      found = true;
      best.best_residual = report.residual;
      best.best_draw = i;
      best.best_report = report;
    }
  }
  if (!found) {
    throw ValidationError(
        "random_model_search: no draw met the objective's preconditions");
  }
  std::ostringstream descriptor;
  descriptor << to_string(objective) << " draw=" << best.best_draw
             << " seed=" << seed << " sys_dim=" << sys_dim
             << " probe_dim=" << probe_dim
             << " residual=" << best.best_residual;
  best.descriptor = descriptor.str();
  return best;
}

}  // namespace edr
