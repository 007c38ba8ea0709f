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

#include "edr/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "edr/spinlab.hpp"

namespace edr {

namespace {

using nlohmann::json;

constexpr const char* kModelFormat = "edrlab-model/1";

double parse_spin_theta(const std::string& source) {
  const std::string prefix = "spin:theta=";
  const std::string value = source.substr(prefix.size());
  try {
    std::size_t consumed = 0;
    const double theta = std::stod(value, &consumed);
    if (consumed != value.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return theta;
  } catch (const std::exception&) {
    throw ModelFileError("cannot parse theta in preset '" + source + "'");
  }
}

Complex entry_from_json(const json& node, const std::string& field,
                        Eigen::Index row, Eigen::Index col) {
  const std::string where =
      field + " row " + std::to_string(row) + ", column " + std::to_string(col);
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
      !node[1].is_number()) {
    throw ModelFileError("malformed complex entry at " + where +
                         ": expected [re, im]");
  }
  return Complex(node[0].get<double>(), node[1].get<double>());
}

ComplexMatrix matrix_from_json(const json& node, const std::string& field) {
  if (!node.is_array() || node.empty()) {
    throw ModelFileError("field '" + field + "' must be a nonempty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(node.size());
  if (!node[0].is_array() || node[0].empty()) {
    throw ModelFileError("field '" + field + "' row 0 must be a nonempty array");
  }
  const Eigen::Index cols = static_cast<Eigen::Index>(node[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = node[i];
    if (!row.is_array() ||
        static_cast<Eigen::Index>(row.size()) != cols) {
      throw ModelFileError("field '" + field + "' row " + std::to_string(i) +
                           " has inconsistent length");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = entry_from_json(row[j], field, i, j);
    }
  }
  return m;
}

ComplexVector vector_from_json(const json& node, const std::string& field) {
  if (!node.is_array() || node.empty()) {
    throw ModelFileError("field '" + field + "' must be a nonempty array");
  }
  ComplexVector v(static_cast<Eigen::Index>(node.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = entry_from_json(node[i], field, i, 0);
  }
  return v;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(json::array({v(i).real(), v(i).imag()}));
  }
  return out;
}

ComplexMatrix observable_field(const json& node, const std::string& field,
                               Eigen::Index dim) {
  if (node.is_string()) {
    return observable_from_name(node.get<std::string>(), dim).matrix();
  }
  return matrix_from_json(node, field);
}

const json& require_field(const json& doc, const std::string& field) {
  if (!doc.contains(field)) {
    throw ModelFileError("missing field '" + field + "'");
  }
  return doc.at(field);
}

LoadedModel model_from_json(const json& doc) {
  if (doc.contains("preset")) {
    const std::string preset = doc.at("preset").get<std::string>();
    if (!is_spin_preset(preset)) {
      throw ModelFileError("unknown preset '" + preset + "'");
    }
    MeasuringProcess process = build_spin_model({parse_spin_theta(preset)});
    Observable a = doc.contains("observable_a")
                       ? Observable(observable_field(doc.at("observable_a"),
                                                     "observable_a", 2))
                       : pauli_z();
    Observable b = doc.contains("observable_b")
                       ? Observable(observable_field(doc.at("observable_b"),
                                                     "observable_b", 2))
                       : pauli_x();
    DensityOperator rho =
        doc.contains("rho")
            ? (doc.at("rho").is_string()
                   ? density_from_name(doc.at("rho").get<std::string>(), 2)
                   : DensityOperator(matrix_from_json(doc.at("rho"), "rho")))
            : DensityOperator::maximally_mixed(2);
    return LoadedModel{std::move(process), std::move(a), std::move(b),
                       std::move(rho)};
  }

  if (doc.value("format", kModelFormat) != kModelFormat) {
    throw ModelFileError("unsupported format '" +
                         doc.value("format", std::string{}) + "'");
  }
  const auto sys_dim = require_field(doc, "system_dim").get<Eigen::Index>();
  const auto probe_dim = require_field(doc, "probe_dim").get<Eigen::Index>();
  if (sys_dim < 1 || probe_dim < 1) {
    throw ModelFileError("dimensions must be positive");
  }

  ComplexVector xi = vector_from_json(require_field(doc, "probe_state"),
                                      "probe_state");
  ComplexMatrix u = matrix_from_json(require_field(doc, "interaction"),
                                     "interaction");
  Observable meter(observable_field(require_field(doc, "meter"), "meter",
                                    probe_dim));
  Observable a(observable_field(require_field(doc, "observable_a"),
                                "observable_a", sys_dim));
  Observable b(observable_field(require_field(doc, "observable_b"),
                                "observable_b", sys_dim));

  const json& rho_node = require_field(doc, "rho");
  DensityOperator rho =
      rho_node.is_string()
          ? density_from_name(rho_node.get<std::string>(), sys_dim)
          : DensityOperator(matrix_from_json(rho_node, "rho"));

  MeasuringProcess process(sys_dim, probe_dim, std::move(xi), std::move(u),
                           std::move(meter));
  return LoadedModel{std::move(process), std::move(a), std::move(b),
                     std::move(rho)};
}

}  // namespace

bool is_spin_preset(const std::string& source) {
  return source.rfind("spin:theta=", 0) == 0;
}

Observable observable_from_name(const std::string& name, Eigen::Index dim) {
  if (name == "X" || name == "Y" || name == "Z") {
    if (dim != 2) {
      throw ModelFileError("Pauli preset '" + name +
                           "' needs dimension 2, got " + std::to_string(dim));
    }
    if (name == "X") return pauli_x();
    if (name == "Y") return pauli_y();
    return pauli_z();
  }
  if (name == "I") {
    return identity_observable(dim);
  }
  throw ModelFileError("unknown observable preset '" + name + "'");
}

DensityOperator density_from_name(const std::string& name, Eigen::Index dim) {
  if (name == "maximally_mixed") {
    return DensityOperator::maximally_mixed(dim);
  }
  const std::string bloch_prefix = "bloch:";
  if (name.rfind(bloch_prefix, 0) == 0) {
    if (dim != 2) {
      throw ModelFileError("bloch preset needs dimension 2");
    }
    std::istringstream in(name.substr(bloch_prefix.size()));
    double x = 0, y = 0, z = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> x >> c1 >> y >> c2 >> z) || c1 != ',' || c2 != ',') {
      throw ModelFileError("cannot parse '" + name +
                           "', expected bloch:x,y,z");
    }
    return DensityOperator::qubit_bloch(x, y, z);
  }
  throw ModelFileError("unknown rho preset '" + name + "'");
}

LoadedModel load_model(const std::string& source) {
  if (is_spin_preset(source)) {
    return LoadedModel{build_spin_model({parse_spin_theta(source)}), pauli_z(),
                       pauli_x(), DensityOperator::maximally_mixed(2)};
  }
  std::ifstream in(source);
  if (!in) {
    throw ModelFileError("cannot open model file '" + source + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw ModelFileError("parse error in '" + source + "' at byte " +
                         std::to_string(err.byte) + ": " + err.what());
  }
  try {
    return model_from_json(doc);
  } catch (const ModelFileError&) {
    throw;
  } catch (const std::exception& err) {
    // Structural invariants re-validated on load; surface which one failed.
    throw ModelFileError("invalid model in '" + source + "': " + err.what());
  }
}

std::string serialize_model(const LoadedModel& model) {
  json doc;
  doc["format"] = kModelFormat;
  doc["system_dim"] = model.process.sys_dim();
  doc["probe_dim"] = model.process.probe_dim();
  doc["probe_state"] = vector_to_json(model.process.probe_state());
  doc["interaction"] = matrix_to_json(model.process.interaction());
  doc["meter"] = matrix_to_json(model.process.meter().matrix());
  doc["observable_a"] = matrix_to_json(model.a.matrix());
  doc["observable_b"] = matrix_to_json(model.b.matrix());
  doc["rho"] = matrix_to_json(model.rho.matrix());
  return doc.dump(2);
}

void save_model(const LoadedModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ModelFileError("cannot write model file '" + path + "'");
  }
  out << serialize_model(model) << "\n";
}

}  // namespace edr
