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

#include "edr/geometry.hpp"

#include <cmath>
#include <string>

namespace edr {

namespace {

constexpr double kOrthogonalityTol = 1e-8;
constexpr double kDegenerateNormTol = 1e-12;

// Cauchy-Schwarz guarantees these radicands are nonnegative; only round-off
// may dip below zero.
double sqrt_nonneg(double radicand, const std::string& what) {
  if (radicand < -1e-10) {
    throw ValidationError(what + ": radicand " + std::to_string(radicand) +
                          " below tolerance");
  }
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

OperatorVector::OperatorVector(ComplexMatrix v) : value(std::move(v)) {
  require_finite(value, "OperatorVector");
  norm = value.norm();  // Frobenius norm = sqrt(Re Tr(V†V))
}

double op_inner(const OperatorVector& x, const OperatorVector& y) {
  if (x.value.rows() != y.value.rows() || x.value.cols() != y.value.cols()) {
    throw DimensionError("op_inner: dimension mismatch");
  }
  return (x.value.adjoint() * y.value).trace().real();
}

BgiResiduals bgi_residuals(const ProofVectors& v) {
  const double mn = op_inner(v.m, v.n);
  if (std::abs(mn) > kOrthogonalityTol * (1.0 + v.m.norm * v.n.norm)) {
    throw ValidationError("bgi_residuals: m and n are not orthogonal");
  }
  if (v.m.norm < kDegenerateNormTol || v.n.norm < kDegenerateNormTol) {
    throw ValidationError("bgi_residuals: m or n too short to normalize");
  }

  const double ab = op_inner(v.a, v.b);
  const double na = v.a.norm;
  const double nb = v.b.norm;
  const double cross = sqrt_nonneg(na * na * nb * nb - ab * ab, "bgi cross");

  const double am_bar = op_inner(v.a, v.m) / v.m.norm;
  const double bn_bar = op_inner(v.b, v.n) / v.n.norm;
  const double a_res = na * na - am_bar * am_bar;
  const double b_res = nb * nb - bn_bar * bn_bar;
  const double lhs1 = a_res * nb * nb + na * na * b_res +
                      2.0 * sqrt_nonneg(a_res, "bgi1 a term") *
                          sqrt_nonneg(b_res, "bgi1 b term") * cross;

  const double da = OperatorVector(v.a.value - v.m.value).norm;
  const double db = OperatorVector(v.b.value - v.n.value).norm;
  const double lhs3 =
      da * da * nb * nb + na * na * db * db + 2.0 * da * db * cross;

  return BgiResiduals{lhs1 - ab * ab, lhs3 - ab * ab};
}

ProofVectors construct_proof_vectors(const JointModel& j, const Observable& a,
                                     const Observable& b,
                                     const DensityOperator& rho,
                                     ProofVariant variant) {
  if (a.dim() != j.sys_dim() || b.dim() != j.sys_dim() ||
      rho.dim() != j.sys_dim()) {
    throw DimensionError("construct_proof_vectors: dimension mismatch");
  }
  const Eigen::Index d = j.sys_dim();
  const ComplexMatrix& s = rho.sqrt_matrix();
  const ComplexMatrix w = build_extension(a, b, rho).w;
  const ComplexMatrix projector =
      j.probe_state() * j.probe_state().adjoint();
  const ComplexMatrix composite_id = identity(d * j.probe_dim());

  const double mean_a = (a.matrix() * rho.matrix()).trace().real();
  const double mean_b = (b.matrix() * rho.matrix()).trace().real();
  const ComplexMatrix a0 = a.matrix() - mean_a * identity(d);
  const ComplexMatrix b0 = b.matrix() - mean_b * identity(d);

  double center_a = mean_a;
  double center_b = mean_b;
  if (variant == ProofVariant::getrm) {
    const ComplexMatrix state = composite_state(rho, j.probe_state());
    center_a = (j.cal_a().matrix() * state).trace().real();
    center_b = (j.cal_b().matrix() * state).trace().real();
  }
  const ComplexMatrix cal_a0 = j.cal_a().matrix() - center_a * composite_id;
  const ComplexMatrix cal_b0 = j.cal_b().matrix() - center_b * composite_id;

  const Complex minus_i(0.0, -1.0);
  const ComplexMatrix sw = s * w;
  return ProofVectors{
      OperatorVector(tensor(a0 * s, projector)),
      OperatorVector(minus_i * tensor(b0 * sw, projector)),
      OperatorVector(cal_a0 * tensor(s, projector)),
      OperatorVector(minus_i * (cal_b0 * tensor(sw, projector))),
  };
}

}  // namespace edr
