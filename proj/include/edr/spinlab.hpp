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

#ifndef EDRLAB_SPINLAB_HPP
#define EDRLAB_SPINLAB_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edr/relations.hpp"
#include "edr/sampling.hpp"

namespace edr {

/// Rotation angle of the probe pre-rotation W(theta) = cos(theta) Z' +
/// sin(theta) X'. The closed forms are periodic; [0, pi/2] covers a cycle.
struct SpinModelParams {
  double theta = 0.0;
};

/// The qubit-probe model (C², |0'>, C[X'] (I (x) W(theta)), Z') that
/// saturates the circle relation in every admissible state.
MeasuringProcess build_spin_model(const SpinModelParams& params);

struct SpinClosedForm {
  double eps_sq = 0.0;  // 4 sin²(theta)
  double eta_sq = 0.0;  // 4 sin²(pi/4 - theta)
};

SpinClosedForm closed_form(const SpinModelParams& params);

/// Max over states of |eps² - closed eps²| and |eta² - closed eta²|;
/// the closed forms hold for every input state.
double state_independence_check(const SpinModelParams& params,
                                std::span<const DensityOperator> states);

struct SweepPoint {
  double theta = 0.0;
  double eps = 0.0;
  double eta = 0.0;
  double circle_residual = 0.0;  // (eps²-2)² + (eta²-2)² - 4, signed
  std::vector<RelationReport> reports;
};

struct SweepResult {
  std::vector<SweepPoint> grid;
  double min_abs_circle_residual = 0.0;
  double argmin_theta = 0.0;  // ties break toward smaller theta
};

/// Evaluates the spin family against A=Z, B=X on a theta grid.
SweepResult sweep(double theta_min, double theta_max, std::size_t steps,
                  const DensityOperator& rho, const std::vector<RelationId>& ids);

/// Fixed (A, B, rho) for a search; when absent the search draws them too.
struct SearchScenario {
  Observable a;
  Observable b;
  DensityOperator rho;
};

struct SearchResult {
  double best_residual = 0.0;
  std::uint64_t best_draw = 0;
  RelationReport best_report;
  std::string descriptor;
};

/// Minimal residual of `objective` over seeded random models: Haar
/// interactions, random meters and states; binary-family objectives use
/// same-spectrum +-1 draws. Deterministic under the seed; ties break toward
/// the earlier draw index.
SearchResult random_model_search(Eigen::Index sys_dim, Eigen::Index probe_dim,
                                 std::uint64_t draws, std::uint64_t seed,
                                 RelationId objective,
                                 const std::optional<SearchScenario>& fixed =
                                     std::nullopt);

}  // namespace edr

#endif  // EDRLAB_SPINLAB_HPP
