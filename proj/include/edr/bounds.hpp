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

#ifndef EDRLAB_BOUNDS_HPP
#define EDRLAB_BOUNDS_HPP

#include "edr/qmodel.hpp"

namespace edr {

/// The two commutator lower bounds. d_ab >= |c_ab| always; they coincide
/// for pure states and can separate for mixed ones.
struct BoundPair {
  double c_ab = 0.0;  // (1/2i) Tr([A,B] rho)
  double d_ab = 0.0;  // (1/2) Tr|sqrt(rho) [A,B] sqrt(rho)|
};

double c_bound(const Observable& a, const Observable& b,
               const DensityOperator& rho);
double d_bound(const Observable& a, const Observable& b,
               const DensityOperator& rho);
BoundPair bound_pair(const Observable& a, const Observable& b,
                     const DensityOperator& rho);

/// Canonical purification of rho on system (x) dual-system, together with
/// the self-adjoint unitary W from the polar decomposition of
/// -i sqrt(rho) [A,B] sqrt(rho) and the extended observables built from it.
///
/// The dual factor is represented as a second copy of the system space: the
/// purification vector is sqrt(rho) reshaped row-major, psi(i*d + k) =
/// sqrt(rho)(i,k), which carries the complex conjugation of the bra
/// components implicitly. Under that representation an operator X on the
/// dual factor acts as the entrywise transpose of X.
struct PurifiedExtension {
  ComplexMatrix w;      // self-adjoint unitary on the system; I on the kernel
  ComplexVector psi;    // unit vector on sys (x) sys; traces back to rho
  Observable a_ext;     // A' = A (x) I
  Observable b_ext_w;   // B'_W = (B - Tr[B rho] I) (x) W^T
};

PurifiedExtension build_extension(const Observable& a, const Observable& b,
                                  const DensityOperator& rho);

/// Quantities of the extended model on the doubled composite
/// sys (x) ancilla (x) probe with interaction lifted to act trivially on
/// the ancilla, reported alongside the originals they certify:
///   sigma(B'_W) <= sigma(B),  eta(B'_W) = eta(B),  C_{A'B'_W} = D_AB.
struct ExtensionIdentityReport {
  double sigma_bw = 0.0;  // std dev of B'_W in the purified state
  double eta_bw = 0.0;    // rms disturbance of B'_W under the lifted process
  double c_prime = 0.0;   // commutator bound of (A', B'_W) in the purified state
  double sigma_b = 0.0;
  double eta_b = 0.0;
  double c_ab = 0.0;
  double d_ab = 0.0;
};

ExtensionIdentityReport verify_extension_identities(
    const PurifiedExtension& ext, const MeasuringProcess& p,
    const Observable& a, const Observable& b, const DensityOperator& rho,
    Eigen::Index composite_dim_cap = 256);

}  // namespace edr

#endif  // EDRLAB_BOUNDS_HPP
