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

#ifndef EDRLAB_RELATIONS_HPP
#define EDRLAB_RELATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "edr/bounds.hpp"
#include "edr/qmodel.hpp"

namespace edr {

/// Every inequality handled by the evaluator. Reports are normalized to the
/// form lhs >= rhs, so "satisfied" is uniformly residual >= -tolerance.
enum class RelationId {
  OZAWA_EDR,            // eps*eta + eps*sigma(B) + sigma(A)*eta >= |C|
  OZAWA_SECOND,         // eps*eta + |<[n(A),B]> + <[A,d(B)]>| >= |C|
  ERROR_FREE_COROLLARY,     // eps(A)=0: sigma(A)*eta >= |C|
  NONDISTURBING_COROLLARY,  // eta(B)=0: eps*sigma(B) >= |C|
  HEISENBERG_EDR,       // eps*eta >= |C|; breakable comparator
  BRANCIARD,            // quadratic form with C
  BRANCIARD_BINARY,     // hatted binary form with C
  INFO_THEORETIC_ZX,    // entropic comparator, fixed to A=Z, B=X, rho=I/2
  MIXED_EDR,            // quadratic form with D
  MIXED_BINARY,         // hatted binary form with D
  SPIN_CIRCLE,          // 4 >= (eps^2-2)^2 + (eta^2-2)^2, needs D = 1
  GETRM,                // bias/output-fluctuation form with D
  ROBERTSON,            // sigma(A)*sigma(B) >= |C|
  ROBERTSON_D,          // sigma(A)*sigma(B) >= D
  ETRM,                 // joint-model error-tradeoff form with D
  ETRMB,                // joint-model hatted binary form with D
};

const std::vector<RelationId>& all_relation_ids();
std::string to_string(RelationId id);
std::optional<RelationId> parse_relation_id(const std::string& name);

/// HEISENBERG_EDR and INFO_THEORETIC_ZX are comparators: they may be
/// violated and never count against a model's validity status.
bool counts_toward_status(RelationId id);

constexpr double kDefaultResidualTol = 1e-9;

struct RelationReport {
  RelationId id = RelationId::OZAWA_EDR;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs, exactly as computed
  bool satisfied = false;
  bool preconditions_met = false;
  std::string diagnostic;  // reason when skipped, empty otherwise
  MomentSet moments;
  BoundPair bounds;
};

RelationReport evaluate(RelationId id, const MeasuringProcess& p,
                        const Observable& a, const Observable& b,
                        const DensityOperator& rho,
                        double tolerance = kDefaultResidualTol);
RelationReport evaluate(RelationId id, const JointModel& j,
                        const Observable& a, const Observable& b,
                        const DensityOperator& rho,
                        double tolerance = kDefaultResidualTol);

/// One report per id; inapplicable ids come back skipped-with-reason.
std::vector<RelationReport> evaluate_all(
    const MeasuringProcess& p, const Observable& a, const Observable& b,
    const DensityOperator& rho,
    const std::vector<RelationId>& ids = all_relation_ids(),
    double tolerance = kDefaultResidualTol);
std::vector<RelationReport> evaluate_all(
    const JointModel& j, const Observable& a, const Observable& b,
    const DensityOperator& rho,
    const std::vector<RelationId>& ids = all_relation_ids(),
    double tolerance = kDefaultResidualTol);

/// The two error-free/non-disturbing constraints; each sub-report is present
/// only when its trigger (eps <= 1e-9, resp. eta <= 1e-9) fires.
struct CorollaryReport {
  std::optional<RelationReport> error_free;
  std::optional<RelationReport> nondisturbing;
};

CorollaryReport corollary_check(const MeasuringProcess& p, const Observable& a,
                                const Observable& b, const DensityOperator& rho,
                                double tolerance = kDefaultResidualTol);

}  // namespace edr

#endif  // EDRLAB_RELATIONS_HPP
