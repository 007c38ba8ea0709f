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

#ifndef EDRLAB_GEOMETRY_HPP
#define EDRLAB_GEOMETRY_HPP

#include "edr/bounds.hpp"
#include "edr/qmodel.hpp"

namespace edr {

/// Element of the operator space L(W) viewed as a real inner-product space
/// with (X,Y) = Re Tr(X†Y). Real column vectors embed as n x 1 matrices.
struct OperatorVector {
  ComplexMatrix value;
  double norm = 0.0;  // cached sqrt of (value, value)

  explicit OperatorVector(ComplexMatrix v);
};

/// (X,Y) = Re Tr(X†Y): symmetric, bilinear over real scalars.
double op_inner(const OperatorVector& x, const OperatorVector& y);

/// The vector quadruple behind the geometric proofs; m and n orthogonal.
struct ProofVectors {
  OperatorVector a;
  OperatorVector b;
  OperatorVector m;
  OperatorVector n;
};

/// LHS - RHS of the two geometric inequalities, both >= 0 for any vectors
/// with m orthogonal to n:
///   bgi1: the form with projections onto normalized m, n
///   bgi3: the form with distances ||a-m||, ||b-n||
struct BgiResiduals {
  double bgi1 = 0.0;
  double bgi3 = 0.0;
};

BgiResiduals bgi_residuals(const ProofVectors& v);

enum class ProofVariant {
  tradeoff,  // composite observables centered at Tr[A rho], Tr[B rho]
  getrm,     // composite observables centered at their own means
};

/// Vectors a = A0 sqrt(rho) (x) |xi><xi|, b = -i B0 sqrt(rho) W (x) |xi><xi|,
/// m = calA0 (sqrt(rho) (x) |xi><xi|), n = -i calB0 (sqrt(rho) W (x) |xi><xi|),
/// with W from build_extension. They satisfy (a,b) = D_AB, m ⟂ n,
/// ||a|| = sigma(A), ||b|| = sigma(B), ||m-a|| = eps(A), and in the tradeoff
/// variant ||n-b|| = eps(B); the getrm variant additionally has
/// ||m|| = sigma(calA), ||n|| = sigma(calB), ||b-n||² = eps(B)² - delta(B)².
ProofVectors construct_proof_vectors(const JointModel& j, const Observable& a,
                                     const Observable& b,
                                     const DensityOperator& rho,
                                     ProofVariant variant);

}  // namespace edr

#endif  // EDRLAB_GEOMETRY_HPP
