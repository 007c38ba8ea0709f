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

#include "edr/bounds.hpp"

#include <cmath>
#include <string>

namespace edr {

namespace {

void require_matching(const Observable& a, const Observable& b,
                      const DensityOperator& rho, const std::string& what) {
  if (a.dim() != b.dim() || a.dim() != rho.dim()) {
    throw DimensionError(what + ": A, B, rho must share one dimension");
  }
}

}  // namespace

double c_bound(const Observable& a, const Observable& b,
               const DensityOperator& rho) {
  require_matching(a, b, rho, "c_bound");
  const Complex trace =
      (commutator(a.matrix(), b.matrix()) * rho.matrix()).trace();
  const Complex c = trace / Complex(0.0, 2.0);
  if (std::abs(c.imag()) > 1e-10) {
    throw ValidationError("c_bound: imaginary residue " +
                          std::to_string(c.imag()) +
                          " signals invalid inputs");
  }
  return c.real();
}

double d_bound(const Observable& a, const Observable& b,
               const DensityOperator& rho) {
  require_matching(a, b, rho, "d_bound");
  const ComplexMatrix& s = rho.sqrt_matrix();
  const ComplexMatrix core = s * commutator(a.matrix(), b.matrix()) * s;
  return 0.5 * trace_norm(core);
}

BoundPair bound_pair(const Observable& a, const Observable& b,
                     const DensityOperator& rho) {
  return BoundPair{c_bound(a, b, rho), d_bound(a, b, rho)};
}

PurifiedExtension build_extension(const Observable& a, const Observable& b,
                                  const DensityOperator& rho) {
  require_matching(a, b, rho, "build_extension");
  const Eigen::Index d = rho.dim();
  const ComplexMatrix& s = rho.sqrt_matrix();

  // -i sqrt(rho) [A,B] sqrt(rho) is Hermitian; its polar sign is W.
  const ComplexMatrix core =
      Complex(0.0, -1.0) * (s * commutator(a.matrix(), b.matrix()) * s);
  const SelfAdjointPolar polar = polar_selfadjoint(core);

  PurifiedExtension ext{
      polar.w,
      ComplexVector(d * d),
      identity_observable(d),  // placeholder, rebuilt below
      identity_observable(d),
  };

  // psi(i*d + k) = sqrt(rho)(i,k): the canonical purification in the
  // operator representation. Zero-eigenvalue directions enter with weight 0.
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) {
      ext.psi(i * d + k) = s(i, k);
    }
  }

  ext.a_ext = Observable(tensor(a.matrix(), identity(d)));
  const double b_mean = (b.matrix() * rho.matrix()).trace().real();
  const ComplexMatrix b_centered = b.matrix() - b_mean * identity(d);
  const ComplexMatrix w_dual = polar.w.transpose();
  ext.b_ext_w = Observable(tensor(b_centered, w_dual));
  return ext;
}

ExtensionIdentityReport verify_extension_identities(
    const PurifiedExtension& ext, const MeasuringProcess& p,
    const Observable& a, const Observable& b, const DensityOperator& rho,
    Eigen::Index composite_dim_cap) {
  require_matching(a, b, rho, "verify_extension_identities");
  if (rho.dim() != p.sys_dim()) {
    throw DimensionError(
        "verify_extension_identities: process dimension mismatch");
  }
  const Eigen::Index d = rho.dim();
  const Eigen::Index dp = p.probe_dim();
  const Eigen::Index doubled = d * d;
  if (doubled * dp > composite_dim_cap) {
    throw DimensionError("verify_extension_identities: composite dimension " +
                         std::to_string(doubled * dp) + " exceeds cap " +
                         std::to_string(composite_dim_cap));
  }

  // Lift U to sys (x) ancilla (x) probe, acting trivially on the ancilla:
  // U'[((i,r),k),((j,s),l)] = delta_rs U[(i,k),(j,l)].
  const ComplexMatrix& u = p.interaction();
  ComplexMatrix lifted = ComplexMatrix::Zero(doubled * dp, doubled * dp);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index k = 0; k < dp; ++k) {
          for (Eigen::Index l = 0; l < dp; ++l) {
            lifted((i * d + r) * dp + k, (j * d + r) * dp + l) =
                u(i * dp + k, j * dp + l);
          }
        }
      }
    }
  }
  const MeasuringProcess lifted_process(doubled, dp, p.probe_state(),
                                        lifted, p.meter());
  const DensityOperator purified = DensityOperator::pure(ext.psi);

  ExtensionIdentityReport report;
  report.sigma_bw = std_dev(ext.b_ext_w, purified);
  report.eta_bw = rms_disturbance(lifted_process, ext.b_ext_w, purified);
  report.c_prime = c_bound(ext.a_ext, ext.b_ext_w, purified);
  report.sigma_b = std_dev(b, rho);
  report.eta_b = rms_disturbance(p, b, rho);
  report.c_ab = c_bound(a, b, rho);
  report.d_ab = d_bound(a, b, rho);
  return report;
}

}  // namespace edr
