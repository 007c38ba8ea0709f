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

#include "edr/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace edr {

namespace {

using nlohmann::json;

constexpr const char* kCsvHeader =
    "id,lhs,rhs,residual,satisfied,eps,eta,sigma_A,sigma_B,C,D";
constexpr const char* kCsvStamp = "# edrlab-report-csv v1";

json moments_to_json(const MomentSet& m) {
  return json{{"eps_a", m.eps_a},
              {"eps_b", m.eps_b},
              {"sigma_a", m.sigma_a},
              {"sigma_b", m.sigma_b},
              {"sigma_cal_a", m.sigma_cal_a},
              {"sigma_cal_b", m.sigma_cal_b},
              {"delta_a", m.delta_a},
              {"delta_b", m.delta_b}};
}

json bounds_to_json(const BoundPair& b) {
  return json{{"c_ab", b.c_ab}, {"d_ab", b.d_ab}};
}

json relation_to_json(const RelationReport& r) {
  json entry{{"id", to_string(r.id)},
             {"preconditions_met", r.preconditions_met},
             {"satisfied", r.satisfied}};
  if (r.preconditions_met) {
    entry["lhs"] = r.lhs;
    entry["rhs"] = r.rhs;
    entry["residual"] = r.residual;
  } else {
    entry["diagnostic"] = r.diagnostic;
  }
  return entry;
}

}  // namespace

std::string format_17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

ReportDocument make_report(const MomentSet& moments, const BoundPair& bounds,
                           const std::vector<RelationReport>& relations) {
  json doc;
  doc["format"] = "edrlab-report/1";
  doc["moments"] = moments_to_json(moments);
  doc["bounds"] = bounds_to_json(bounds);
  doc["relations"] = json::array();
  for (const RelationReport& r : relations) {
    doc["relations"].push_back(relation_to_json(r));
  }

  std::ostringstream csv;
  csv << kCsvStamp << "\n" << kCsvHeader << "\n";
  for (const RelationReport& r : relations) {
    csv << to_string(r.id) << ',' << format_17(r.lhs) << ','
        << format_17(r.rhs) << ',' << format_17(r.residual) << ','
        << (r.preconditions_met ? (r.satisfied ? "true" : "false") : "skipped")
        << ',' << format_17(r.moments.eps_a) << ',' << format_17(r.moments.eps_b)
        << ',' << format_17(r.moments.sigma_a) << ','
        << format_17(r.moments.sigma_b) << ',' << format_17(r.bounds.c_ab)
        << ',' << format_17(r.bounds.d_ab) << "\n";
  }
  return ReportDocument{doc.dump(2), csv.str()};
}

std::string sweep_csv(const SweepResult& sweep,
                      const std::vector<RelationId>& ids) {
  std::ostringstream csv;
  csv << kCsvStamp << "\n";
  csv << "theta,eps_sq,eta_sq,circle_residual";
  for (RelationId id : ids) {
    csv << ',' << to_string(id);
  }
  csv << "\n";
  for (const SweepPoint& point : sweep.grid) {
    csv << format_17(point.theta) << ',' << format_17(point.eps * point.eps)
        << ',' << format_17(point.eta * point.eta) << ','
        << format_17(point.circle_residual);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const double residual = i < point.reports.size()
                                  ? point.reports[i].residual
                                  : std::nan("");
      csv << ',' << format_17(residual);
    }
    csv << "\n";
  }
  return csv.str();
}

}  // namespace edr
