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

#ifndef EDRLAB_REPORT_IO_HPP
#define EDRLAB_REPORT_IO_HPP

#include <string>
#include <vector>

#include "edr/relations.hpp"
#include "edr/spinlab.hpp"

namespace edr {

/// %.17g — round-trips doubles exactly.
std::string format_17(double value);

/// Machine-readable report: JSON document plus a fixed-header CSV table.
struct ReportDocument {
  std::string json_text;
  std::string csv_text;
};

/// One CSV row per relation (id, lhs, rhs, residual, satisfied, eps, eta,
/// sigma_A, sigma_B, C, D); skipped relations carry nan numerics and
/// "skipped" in the satisfied column. The header line is version-stamped.
ReportDocument make_report(const MomentSet& moments, const BoundPair& bounds,
                           const std::vector<RelationReport>& relations);

/// Sweep table: theta, eps_sq, eta_sq, circle_residual, then one residual
/// column per requested relation.
std::string sweep_csv(const SweepResult& sweep,
                      const std::vector<RelationId>& ids);

}  // namespace edr

#endif  // EDRLAB_REPORT_IO_HPP
