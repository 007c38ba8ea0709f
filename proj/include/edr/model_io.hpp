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

#ifndef EDRLAB_MODEL_IO_HPP
#define EDRLAB_MODEL_IO_HPP

#include <string>

#include "edr/qmodel.hpp"

namespace edr {

/// Parse/validation failure with a location hint (byte offset for document
/// errors, matrix row/column for entry errors).
class ModelFileError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A fully validated model: the measuring process plus the observables and
/// state it is scored against.
struct LoadedModel {
  MeasuringProcess process;
  Observable a;
  Observable b;
  DensityOperator rho;
};

/// Loads a model from a JSON document (complex entries as [re, im] pairs in
/// row-major nested arrays) or from the preset string "spin:theta=<value>".
/// Matrix-valued fields accept Pauli names ("X","Y","Z","I") for observables
/// and the meter, and "maximally_mixed" / "bloch:x,y,z" for rho.
LoadedModel load_model(const std::string& source);

/// Observable override by Pauli name ("X", "Y", "Z", "I").
Observable observable_from_name(const std::string& name, Eigen::Index dim);

/// rho override: "maximally_mixed" or "bloch:x,y,z".
DensityOperator density_from_name(const std::string& name, Eigen::Index dim);

bool is_spin_preset(const std::string& source);

/// JSON text that load_model() reproduces exactly (all matrices explicit).
std::string serialize_model(const LoadedModel& model);

void save_model(const LoadedModel& model, const std::string& path);

}  // namespace edr

#endif  // EDRLAB_MODEL_IO_HPP
