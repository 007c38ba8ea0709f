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

#ifndef EDRLAB_SAMPLING_HPP
#define EDRLAB_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "edr/qmodel.hpp"

namespace edr {

/// Independent engine for (seed, index). Each draw of a randomized suite
/// gets its own substream, so results match between serial and parallel
/// runs and are reproducible under a fixed seed.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

ComplexMatrix random_gaussian_complex(std::mt19937_64& rng, Eigen::Index rows,
                                      Eigen::Index cols);

/// GUE-style Hermitian matrix: (G + G†)/2 for complex Gaussian G.
ComplexMatrix random_hermitian_matrix(std::mt19937_64& rng, Eigen::Index dim);
Observable random_observable(std::mt19937_64& rng, Eigen::Index dim);

/// Haar-distributed unitary via QR of a complex Gaussian with the phases of
/// the R diagonal fixed.
ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index dim);

ComplexVector random_unit_vector(std::mt19937_64& rng, Eigen::Index dim);

/// Full-rank mixed state G G† / Tr(G G†).
DensityOperator random_density(std::mt19937_64& rng, Eigen::Index dim);
DensityOperator random_pure_density(std::mt19937_64& rng, Eigen::Index dim);

/// Probe observable with eigenvalues ±1 (at least one of each sign) in a
/// Haar-random eigenbasis; satisfies the same spectrum condition exactly.
Observable random_binary_meter(std::mt19937_64& rng, Eigen::Index dim);

/// A, B with A² = B² = I and Tr[A rho] = Tr[B rho] = 0 exactly: rho is drawn
/// with largest eigenvalue >= 1/2, then A = 2|v><v| - I, B = 2|w><w| - I for
/// unit vectors v, w with <v|rho|v> = <w|rho|w> = 1/2.
struct BinaryScenario {
  Observable a;
  Observable b;
  DensityOperator rho;
};

BinaryScenario random_binary_scenario(std::mt19937_64& rng, Eigen::Index dim);

/// Qubit scenario with D_AB = 1 exactly: a Haar-conjugated copy of
/// (Z, X, (I + alpha Y)/2) with alpha uniform in [-1, 1]. This is the
/// admissible family of the circle relation.
BinaryScenario random_circle_scenario(std::mt19937_64& rng);

/// Haar interaction, random pure probe state, and either a GUE meter or a
/// binary (+-1) meter.
MeasuringProcess random_process(std::mt19937_64& rng, Eigen::Index sys_dim,
                                Eigen::Index probe_dim, bool binary_meter);

/// Commuting composite pair through a shared Haar eigenbasis; diagonal
/// values Gaussian, or random +-1 patterns when binary.
JointModel random_joint_model(std::mt19937_64& rng, Eigen::Index sys_dim,
                              Eigen::Index probe_dim, bool binary);

}  // namespace edr

#endif  // EDRLAB_SAMPLING_HPP
