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

#include "edr/suite.hpp"

#include <chrono>
#include <limits>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "edr/bounds.hpp"
#include "edr/geometry.hpp"
#include "edr/relations.hpp"
#include "edr/report_io.hpp"
#include "edr/spinlab.hpp"

namespace edr {

namespace {

constexpr int kGridSteps = 101;
constexpr int kStatesPerAngle = 20;
constexpr int kUniversalityDraws = 1000;
constexpr int kBridgeDraws = 500;
constexpr int kPureDraws = 500;
constexpr double kGridTol = 1e-9;
constexpr double kSeparationTol = 1e-12;
constexpr double kResidualTol = 1e-9;
constexpr double kSpinRuntimeBudget = 5.0;     // seconds
constexpr double kSuiteRuntimeBudget = 60.0;   // seconds

struct Check {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& message) {
    if (!ok) {
      passed = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << message;
    }
  }
};

double grid_theta(int i) {
  return (std::numbers::pi / 4.0) * static_cast<double>(i) /
         static_cast<double>(kGridSteps - 1);
}

Eigen::Index draw_sys_dim(int i) { return 2 + (i % 2); }
Eigen::Index draw_probe_dim(int i) { return 2 + ((i / 2) % 2); }

CriterionResult spin_closed_forms(std::uint64_t seed) {
  Check check;
  double worst = 0.0;
  for (int i = 0; i < kGridSteps; ++i) {
    const SpinModelParams params{grid_theta(i)};
    std::vector<DensityOperator> states;
    states.reserve(kStatesPerAngle);
    for (int s = 0; s < kStatesPerAngle; ++s) {
      std::mt19937_64 rng = substream(seed, 1000000 + i * 64 + s);
      states.push_back(random_density(rng, 2));
    }
    worst = std::max(worst, state_independence_check(params, states));
  }
  check.require(worst <= kGridTol,
                "closed-form deviation " + format_17(worst));
  if (check.passed) {
    check.detail << "max |measured^2 - closed form| = " << format_17(worst)
                 << " over " << kGridSteps << " angles x " << kStatesPerAngle
                 << " states";
  }
  return CriterionResult{1, "spin-closed-forms", check.passed,
                         check.detail.str(), 0.0};
}

CriterionResult circle_tightness(std::uint64_t) {
  Check check;
  const std::vector<DensityOperator> states = {
      DensityOperator::maximally_mixed(2),
      DensityOperator::qubit_bloch(0.0, 1.0, 0.0),
      DensityOperator::qubit_bloch(0.0, -1.0, 0.0),
      DensityOperator::qubit_bloch(0.0, 0.5, 0.0),
  };
  const Observable z = pauli_z();
  const Observable x = pauli_x();
  double worst = 0.0;
  for (int i = 0; i < kGridSteps; ++i) {
    const MeasuringProcess p = build_spin_model({grid_theta(i)});
    for (const DensityOperator& rho : states) {
      const double es = std::pow(rms_error(p, z, rho), 2);
      const double hs = std::pow(rms_disturbance(p, x, rho), 2);
      const double circle =
          (es - 2.0) * (es - 2.0) + (hs - 2.0) * (hs - 2.0);
      worst = std::max(worst, std::abs(circle - 4.0));
    }
  }
  check.require(worst <= kGridTol, "circle deviation " + format_17(worst));
  if (check.passed) {
    check.detail << "max |(eps^2-2)^2 + (eta^2-2)^2 - 4| = " << format_17(worst)
                 << " over " << kGridSteps << " angles x " << states.size()
                 << " admissible states";
  }
  return CriterionResult{2, "circle-tightness", check.passed,
                         check.detail.str(), 0.0};
}

CriterionResult mixed_state_separation(std::uint64_t) {
  Check check;
  const Observable z = pauli_z();
  const Observable x = pauli_x();
  const DensityOperator rho = DensityOperator::maximally_mixed(2);
  const BoundPair bp = bound_pair(z, x, rho);
  check.require(std::abs(bp.c_ab) <= kSeparationTol,
                "C_AB = " + format_17(bp.c_ab));
  check.require(std::abs(bp.d_ab - 1.0) <= kSeparationTol,
                "D_AB = " + format_17(bp.d_ab));

  const MeasuringProcess p = build_spin_model({std::numbers::pi / 8.0});
  const RelationReport mixed = evaluate(RelationId::MIXED_EDR, p, z, x, rho);
  const RelationReport bran = evaluate(RelationId::BRANCIARD, p, z, x, rho);
  check.require(std::abs(mixed.rhs - 1.0) <= 1e-11,
                "MIXED_EDR rhs = " + format_17(mixed.rhs));
  check.require(std::abs(bran.rhs) <= 1e-20,
                "BRANCIARD rhs = " + format_17(bran.rhs));
  if (check.passed) {
    check.detail << "C_AB = " << format_17(bp.c_ab)
                 << ", D_AB = " << format_17(bp.d_ab)
                 << "; MIXED_EDR rhs = " << format_17(mixed.rhs)
                 << ", BRANCIARD rhs = " << format_17(bran.rhs);
  }
  return CriterionResult{3, "mixed-state-separation", check.passed,
                         check.detail.str(), 0.0};
}

CriterionResult extremal_points(std::uint64_t) {
  Check check;
  const Observable z = pauli_z();
  const Observable x = pauli_x();
  const std::vector<DensityOperator> states = {
      DensityOperator::maximally_mixed(2),
      DensityOperator::qubit_bloch(0.0, 1.0, 0.0),
  };
  const double root2 = std::numbers::sqrt2;
  for (const DensityOperator& rho : states) {
    const MeasuringProcess error_free = build_spin_model({0.0});
    check.require(rms_error(error_free, z, rho) <= kResidualTol,
                  "eps(Z) at theta=0 not zero");
    check.require(
        std::abs(rms_disturbance(error_free, x, rho) - root2) <= kResidualTol,
        "eta(X) at theta=0 differs from sqrt(2)");

    const MeasuringProcess nondisturbing =
        build_spin_model({std::numbers::pi / 4.0});
    check.require(rms_disturbance(nondisturbing, x, rho) <= kResidualTol,
                  "eta(X) at theta=pi/4 not zero");
    check.require(
        std::abs(rms_error(nondisturbing, z, rho) - root2) <= kResidualTol,
        "eps(Z) at theta=pi/4 differs from sqrt(2)");
  }
  if (check.passed) {
    check.detail << "eps(Z)=0 => eta(X)=sqrt(2) and eta(X)=0 => "
                    "eps(Z)=sqrt(2), both to 1e-9";
  }
  return CriterionResult{4, "extremal-points", check.passed,
                         check.detail.str(), 0.0};
}

CriterionResult universality(std::uint64_t seed) {
  Check check;
  const std::vector<RelationId> general_ids = {
      RelationId::OZAWA_EDR,   RelationId::OZAWA_SECOND,
      RelationId::BRANCIARD,   RelationId::MIXED_EDR,
      RelationId::GETRM,       RelationId::ROBERTSON_D,
      RelationId::ETRM,
  };
  const std::vector<RelationId> binary_ids = {
      RelationId::BRANCIARD_BINARY,
      RelationId::MIXED_BINARY,
      RelationId::ETRMB,
  };

  int violations = 0;
  int skipped = 0;
  double worst = std::numeric_limits<double>::infinity();
  auto score = [&](const RelationReport& report) {
    if (!report.preconditions_met) {
      ++skipped;
      return;
    }
    worst = std::min(worst, report.residual);
    if (report.residual < -kResidualTol) {
      ++violations;
    }
  };

  for (int i = 0; i < kUniversalityDraws; ++i) {
    const Eigen::Index ds = draw_sys_dim(i);
    const Eigen::Index dp = draw_probe_dim(i);
    {
      std::mt19937_64 rng = substream(seed, 2000000 + i);
      const MeasuringProcess p = random_process(rng, ds, dp, false);
      const Observable a = random_observable(rng, ds);
      const Observable b = random_observable(rng, ds);
      const DensityOperator rho = random_density(rng, ds);
      for (const RelationReport& report :
           evaluate_all(p, a, b, rho, general_ids)) {
        score(report);
      }
    }
    {
      std::mt19937_64 rng = substream(seed, 3000000 + i);
      const MeasuringProcess p = random_process(rng, ds, dp, true);
      const BinaryScenario scenario = random_binary_scenario(rng, ds);
      for (const RelationReport& report : evaluate_all(
               p, scenario.a, scenario.b, scenario.rho, binary_ids)) {
        score(report);
      }
    }
    {
      std::mt19937_64 rng = substream(seed, 4000000 + i);
      const MeasuringProcess p = random_process(rng, 2, dp, true);
      const BinaryScenario scenario = random_circle_scenario(rng);
      score(evaluate(RelationId::SPIN_CIRCLE, p, scenario.a, scenario.b,
                     scenario.rho));
    }
  }
  check.require(violations == 0,
                std::to_string(violations) + " residuals below -1e-9");
  check.require(skipped == 0,
                std::to_string(skipped) + " draws skipped unexpectedly");
  if (check.passed) {
    check.detail << kUniversalityDraws
                 << " draws per relation, most negative residual = "
                 << format_17(worst);
  }
  return CriterionResult{5, "universality-suite", check.passed,
                         check.detail.str(), 0.0};
}

CriterionResult heisenberg_violability(std::uint64_t) {
  Check check;
  const MeasuringProcess p = build_spin_model({0.0});
  const DensityOperator rho = DensityOperator::qubit_bloch(0.0, 1.0, 0.0);
  const RelationReport report =
      evaluate(RelationId::HEISENBERG_EDR, p, pauli_z(), pauli_x(), rho);
  check.require(std::abs(report.residual + 1.0) <= kResidualTol,
                "HEISENBERG_EDR residual = " + format_17(report.residual));
  check.require(!report.satisfied, "violation not flagged");
  if (check.passed) {
    check.detail << "eps*eta = " << format_17(report.lhs)
                 << " < " << format_17(report.rhs)
                 << ", residual = " << format_17(report.residual);
  }
  return CriterionResult{6, "heisenberg-violability", check.passed,
                         check.detail.str(), 0.0};
}

CriterionResult purification_bridge(std::uint64_t seed) {
  Check check;
  double worst_vector = 0.0;
  double worst_extension = 0.0;
  for (int i = 0; i < kBridgeDraws; ++i) {
    std::mt19937_64 rng = substream(seed, 5000000 + i);
    const Eigen::Index ds = draw_sys_dim(i);
    const Eigen::Index dp = draw_probe_dim(i);
    const MeasuringProcess p = random_process(rng, ds, dp, false);
    const Observable a = random_observable(rng, ds);
    const Observable b = random_observable(rng, ds);
    const DensityOperator rho = random_density(rng, ds);

    const JointModel joint = to_joint_model(p, b);
    const double eps = rms_error(p, a, rho);
    const double eta = rms_disturbance(p, b, rho);
    const double d_ab = d_bound(a, b, rho);

    const ProofVectors v =
        construct_proof_vectors(joint, a, b, rho, ProofVariant::tradeoff);
    const double dev_ab = std::abs(op_inner(v.a, v.b) - d_ab);
    const double dev_mn = std::abs(op_inner(v.m, v.n));
    const double dev_na = std::abs(v.a.norm - std_dev(a, rho));
    const double dev_ma =
        std::abs(OperatorVector(v.m.value - v.a.value).norm - eps);
    const double dev_nb =
        std::abs(OperatorVector(v.n.value - v.b.value).norm - eta);
    worst_vector = std::max({worst_vector, dev_ab, dev_mn, dev_na, dev_ma,
                             dev_nb});

    const PurifiedExtension ext = build_extension(a, b, rho);
    const ExtensionIdentityReport ids =
        verify_extension_identities(ext, p, a, b, rho);
    check.require(ids.sigma_bw <= ids.sigma_b + 1e-10,
                  "sigma(B'_W) exceeds sigma(B) at draw " + std::to_string(i));
    worst_extension =
        std::max({worst_extension, std::abs(ids.eta_bw - ids.eta_b),
                  std::abs(ids.c_prime - ids.d_ab)});
  }
  check.require(worst_vector <= kResidualTol,
                "proof-vector identity deviation " + format_17(worst_vector));
  check.require(worst_extension <= kResidualTol,
                "extension identity deviation " + format_17(worst_extension));
  if (check.passed) {
    check.detail << kBridgeDraws << " models; max proof-vector deviation = "
                 << format_17(worst_vector)
                 << ", max extension deviation = "
                 << format_17(worst_extension);
  }
  return CriterionResult{7, "purification-bridge", check.passed,
                         check.detail.str(), 0.0};
}

CriterionResult pure_state_collapse(std::uint64_t seed) {
  Check check;
  double worst_bound = 0.0;
  double worst_report = 0.0;
  for (int i = 0; i < kPureDraws; ++i) {
    std::mt19937_64 rng = substream(seed, 6000000 + i);
    const Eigen::Index ds = draw_sys_dim(i);
    const Eigen::Index dp = draw_probe_dim(i);
    const MeasuringProcess p = random_process(rng, ds, dp, false);
    const Observable a = random_observable(rng, ds);
    const Observable b = random_observable(rng, ds);
    const DensityOperator rho = random_pure_density(rng, ds);

    const BoundPair bp = bound_pair(a, b, rho);
    worst_bound = std::max(worst_bound,
                           std::abs(bp.d_ab - std::abs(bp.c_ab)));

    const RelationReport mixed = evaluate(RelationId::MIXED_EDR, p, a, b, rho);
    const RelationReport bran = evaluate(RelationId::BRANCIARD, p, a, b, rho);
    worst_report = std::max({worst_report, std::abs(mixed.lhs - bran.lhs),
                             std::abs(mixed.rhs - bran.rhs),
                             std::abs(mixed.residual - bran.residual)});
  }
  check.require(worst_bound <= kResidualTol,
                "D vs |C| deviation " + format_17(worst_bound));
  check.require(worst_report <= kResidualTol,
                "report deviation " + format_17(worst_report));
  if (check.passed) {
    check.detail << kPureDraws << " pure-state models; max |D - |C|| = "
                 << format_17(worst_bound)
                 << ", max report difference = " << format_17(worst_report);
  }
  return CriterionResult{8, "pure-state-collapse", check.passed,
                         check.detail.str(), 0.0};
}

CriterionResult comparator_dominance(std::uint64_t) {
  Check check;
  const MeasuringProcess p = build_spin_model({0.0});
  const DensityOperator rho = DensityOperator::maximally_mixed(2);
  const double eta = rms_disturbance(p, pauli_x(), rho);
  const double circle_floor = eta * eta;  // the circle forces eta^2 = 2 here
  check.require(std::abs(circle_floor - 2.0) <= kResidualTol,
                "eta^2 at the error-free point = " + format_17(circle_floor));

  // The entropic comparator at eps = 0 permits eta^2 down to
  // 3*16/(pi^2 e^2) - 1/3.
  const double info_constant = 16.0 / (std::numbers::pi * std::numbers::pi *
                                       std::numbers::e * std::numbers::e);
  const double info_floor = 3.0 * info_constant - 1.0 / 3.0;
  check.require(circle_floor > info_floor + 1.5,
                "circle bound not strictly stronger");

  const RelationReport comparator =
      evaluate(RelationId::INFO_THEORETIC_ZX, p, pauli_z(), pauli_x(), rho);
  check.require(comparator.preconditions_met && comparator.satisfied,
                "comparator unexpectedly violated at the error-free point");
  if (check.passed) {
    check.detail << "circle forces eta^2 = " << format_17(circle_floor)
                 << "; comparator permits eta^2 >= " << format_17(info_floor)
                 << " (constant " << format_17(info_constant) << ")";
  }
  return CriterionResult{9, "comparator-dominance", check.passed,
                         check.detail.str(), 0.0};
}

CriterionResult timed(const std::function<CriterionResult(std::uint64_t)>& fn,
                      std::uint64_t seed, double budget_seconds = 0.0) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result = fn(seed);
  const auto stop = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(stop - start).count();
  if (budget_seconds > 0.0 && result.seconds >= budget_seconds) {
    result.passed = false;
    result.detail += "; runtime " + format_17(result.seconds) +
                     "s exceeds budget " + format_17(budget_seconds) + "s";
  }
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  results.push_back(timed(spin_closed_forms, seed, kSpinRuntimeBudget));
  results.push_back(timed(circle_tightness, seed));
  results.push_back(timed(mixed_state_separation, seed));
  results.push_back(timed(extremal_points, seed));
  results.push_back(timed(universality, seed, kSuiteRuntimeBudget));
  results.push_back(timed(heisenberg_violability, seed));
  results.push_back(timed(purification_bridge, seed));
  results.push_back(timed(pure_state_collapse, seed));
  results.push_back(timed(comparator_dominance, seed));
  return results;
}

void print_suite_results(const std::vector<CriterionResult>& results,
                         std::ostream& out) {
  for (const CriterionResult& result : results) {
    out << (result.passed ? "[PASS] " : "[FAIL] ") << result.index << ' '
        << result.name << " (" << result.seconds << "s)";
    if (!result.detail.empty()) {
      out << ": " << result.detail;
    }
    out << "\n";
  }
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& result : results) {
    if (!result.passed) return false;
  }
  return true;
}

}  // namespace edr
