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

#include "edr/qmodel.hpp"

#include <cmath>
#include <utility>

namespace edr {

namespace {

constexpr double kTraceOneTol = 1e-10;
constexpr double kProbeNormTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;
constexpr double kMomentClamp = -1e-12;
constexpr double kSigmaCalFloor = 1e-10;

// Clamp tiny negative round-off under a square root; anything below the
// floor signals a logic error rather than noise.
double sqrt_clamped(double value, const std::string& what) {
  if (value < kMomentClamp) {
    throw ValidationError(what + ": negative second moment " +
                          std::to_string(value));
  }
  return std::sqrt(std::max(value, 0.0));
}

double real_trace_product(const ComplexMatrix& op, const ComplexMatrix& state) {
  return (op * state).trace().real();
}

}  // namespace

Observable::Observable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  require_hermitian(matrix_, "Observable");
}

Observable pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return Observable(m);
}

Observable pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return Observable(m);
}

Observable pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return Observable(m);
}

Observable identity_observable(Eigen::Index dim) {
  return Observable(identity(dim));
}

DensityOperator::DensityOperator(ComplexMatrix rho) : rho_(std::move(rho)) {
  require_hermitian(rho_, "DensityOperator");
  const double trace = rho_.trace().real();
  if (std::abs(trace - 1.0) > kTraceOneTol) {
    throw ValidationError("DensityOperator: trace " + std::to_string(trace) +
                          " is not 1");
  }
  const HermitianEig eig = eig_hermitian(rho_);
  if (eig.eigenvalues.minCoeff() < -1e-12) {
    throw ValidationError("DensityOperator: negative eigenvalue " +
                          std::to_string(eig.eigenvalues.minCoeff()));
  }
  eigenvalues_ = eig.eigenvalues.cwiseMax(0.0);
  eigenvectors_ = eig.eigenvectors;
  RealVector roots = eigenvalues_.cwiseSqrt();
  sqrt_rho_ = eigenvectors_ *
              roots.asDiagonal().toDenseMatrix().cast<Complex>() *
              eigenvectors_.adjoint();
}

DensityOperator DensityOperator::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > kProbeNormTol) {
    throw ValidationError("DensityOperator::pure: vector norm " +
                          std::to_string(norm) + " is not 1");
  }
  return DensityOperator(psi * psi.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
  return DensityOperator(identity(dim) / static_cast<double>(dim));
}

DensityOperator DensityOperator::qubit_bloch(double x, double y, double z) {
  if (x * x + y * y + z * z > 1.0 + 1e-12) {
    throw ValidationError("qubit_bloch: Bloch vector lies outside the sphere");
  }
  ComplexMatrix m = 0.5 * (identity(2) + x * pauli_x().matrix() +
                           y * pauli_y().matrix() + z * pauli_z().matrix());
  return DensityOperator(m);
}

MeasuringProcess::MeasuringProcess(Eigen::Index sys_dim, Eigen::Index probe_dim,
                                   ComplexVector probe_state,
                                   ComplexMatrix interaction, Observable meter)
    : sys_dim_(sys_dim),
      probe_dim_(probe_dim),
      probe_state_(std::move(probe_state)),
      interaction_(std::move(interaction)),
      meter_(std::move(meter)) {
  if (sys_dim_ < 1 || probe_dim_ < 1) {
    throw DimensionError("MeasuringProcess: dimensions must be positive");
  }
  if (probe_state_.size() != probe_dim_) {
    throw DimensionError("MeasuringProcess: probe state length " +
                         std::to_string(probe_state_.size()) +
                         " does not match probe dimension " +
                         std::to_string(probe_dim_));
  }
  if (std::abs(probe_state_.norm() - 1.0) > kProbeNormTol) {
    throw ValidationError("MeasuringProcess: probe state norm " +
                          std::to_string(probe_state_.norm()) + " is not 1");
  }
  if (interaction_.rows() != sys_dim_ * probe_dim_ ||
      interaction_.cols() != sys_dim_ * probe_dim_) {
    throw DimensionError("MeasuringProcess: interaction must act on dim " +
                         std::to_string(sys_dim_ * probe_dim_));
  }
  require_finite(interaction_, "MeasuringProcess interaction");
  if (!is_unitary(interaction_, kUnitaryTol)) {
    throw ValidationError("MeasuringProcess: interaction is not unitary");
  }
  if (meter_.dim() != probe_dim_) {
    throw DimensionError("MeasuringProcess: meter dimension " +
                         std::to_string(meter_.dim()) +
                         " does not match probe dimension " +
                         std::to_string(probe_dim_));
  }
}

JointModel::JointModel(Eigen::Index sys_dim, Eigen::Index probe_dim,
                       ComplexVector probe_state, Observable cal_a,
                       Observable cal_b)
    : sys_dim_(sys_dim),
      probe_dim_(probe_dim),
      probe_state_(std::move(probe_state)),
      cal_a_(std::move(cal_a)),
      cal_b_(std::move(cal_b)) {
  if (sys_dim_ < 1 || probe_dim_ < 1) {
    throw DimensionError("JointModel: dimensions must be positive");
  }
  if (probe_state_.size() != probe_dim_) {
    throw DimensionError("JointModel: probe state length mismatch");
  }
  if (std::abs(probe_state_.norm() - 1.0) > kProbeNormTol) {
    throw ValidationError("JointModel: probe state norm is not 1");
  }
  const Eigen::Index composite = sys_dim_ * probe_dim_;
  if (cal_a_.dim() != composite || cal_b_.dim() != composite) {
    throw DimensionError("JointModel: composite observables must act on dim " +
                         std::to_string(composite));
  }
  const double comm_norm =
      commutator(cal_a_.matrix(), cal_b_.matrix()).norm();
  const double allowed =
      1e-8 * (1.0 + cal_a_.matrix().norm() * cal_b_.matrix().norm());
  if (comm_norm > allowed) {
    throw ValidationError("JointModel: composite observables do not commute (" +
                          std::to_string(comm_norm) + " > " +
                          std::to_string(allowed) + ")");
  }
}

ComplexMatrix composite_state(const DensityOperator& rho,
                              const ComplexVector& probe_state) {
  const ComplexMatrix projector = probe_state * probe_state.adjoint();
  return tensor(rho.matrix(), projector);
}

Observable evolve_meter(const MeasuringProcess& p) {
  const ComplexMatrix m0 = tensor(identity(p.sys_dim()), p.meter().matrix());
  return Observable(p.interaction().adjoint() * m0 * p.interaction());
}

Observable evolve_system(const MeasuringProcess& p, const Observable& b) {
  if (b.dim() != p.sys_dim()) {
    throw DimensionError("evolve_system: observable dimension mismatch");
  }
  const ComplexMatrix b0 = tensor(b.matrix(), identity(p.probe_dim()));
  return Observable(p.interaction().adjoint() * b0 * p.interaction());
}

Observable error_observable(const MeasuringProcess& p, const Observable& a) {
  if (a.dim() != p.sys_dim()) {
    throw DimensionError("error_observable: observable dimension mismatch");
  }
  return Observable(evolve_meter(p).matrix() -
                    tensor(a.matrix(), identity(p.probe_dim())));
}

Observable disturbance_observable(const MeasuringProcess& p,
                                  const Observable& b) {
  return Observable(evolve_system(p, b).matrix() -
                    tensor(b.matrix(), identity(p.probe_dim())));
}

double rms_error(const MeasuringProcess& p, const Observable& a,
                 const DensityOperator& rho) {
  if (rho.dim() != p.sys_dim()) {
    throw DimensionError("rms_error: state dimension mismatch");
  }
  const ComplexMatrix n = error_observable(p, a).matrix();
  const ComplexMatrix state = composite_state(rho, p.probe_state());
  return sqrt_clamped(real_trace_product(n * n, state), "rms_error");
}

double rms_disturbance(const MeasuringProcess& p, const Observable& b,
                       const DensityOperator& rho) {
  if (rho.dim() != p.sys_dim()) {
    throw DimensionError("rms_disturbance: state dimension mismatch");
  }
  const ComplexMatrix d = disturbance_observable(p, b).matrix();
  const ComplexMatrix state = composite_state(rho, p.probe_state());
  return sqrt_clamped(real_trace_product(d * d, state), "rms_disturbance");
}

double expectation(const Observable& a, const DensityOperator& rho) {
  if (a.dim() != rho.dim()) {
    throw DimensionError("expectation: dimension mismatch");
  }
  return real_trace_product(a.matrix(), rho.matrix());
}

double std_dev(const Observable& a, const DensityOperator& rho) {
  const double mean = expectation(a, rho);
  const double second =
      real_trace_product(a.matrix() * a.matrix(), rho.matrix());
  return sqrt_clamped(second - mean * mean, "std_dev");
}

JointModel to_joint_model(const MeasuringProcess& p, const Observable& b) {
  return JointModel(p.sys_dim(), p.probe_dim(), p.probe_state(),
                    evolve_meter(p), evolve_system(p, b));
}

double joint_rms_error(const JointModel& j, const Observable& target,
                       Channel channel, const DensityOperator& rho) {
  if (target.dim() != j.sys_dim() || rho.dim() != j.sys_dim()) {
    throw DimensionError("joint_rms_error: dimension mismatch");
  }
  const Observable& cal =
      channel == Channel::A ? j.cal_a() : j.cal_b();
  const ComplexMatrix diff =
      cal.matrix() - tensor(target.matrix(), identity(j.probe_dim()));
  const ComplexMatrix state = composite_state(rho, j.probe_state());
  return sqrt_clamped(real_trace_product(diff * diff, state),
                      "joint_rms_error");
}

MomentSet moments(const JointModel& j, const Observable& a,
                  const Observable& b, const DensityOperator& rho) {
  if (a.dim() != j.sys_dim() || b.dim() != j.sys_dim() ||
      rho.dim() != j.sys_dim()) {
    throw DimensionError("moments: dimension mismatch");
  }
  const ComplexMatrix state = composite_state(rho, j.probe_state());
  const ComplexMatrix probe_id = identity(j.probe_dim());

  MomentSet m;
  m.eps_a = joint_rms_error(j, a, Channel::A, rho);
  m.eps_b = joint_rms_error(j, b, Channel::B, rho);
  m.sigma_a = std_dev(a, rho);
  m.sigma_b = std_dev(b, rho);

  const ComplexMatrix& cal_a = j.cal_a().matrix();
  const ComplexMatrix& cal_b = j.cal_b().matrix();
  const double mean_cal_a = real_trace_product(cal_a, state);
  const double mean_cal_b = real_trace_product(cal_b, state);
  m.sigma_cal_a = sqrt_clamped(
      real_trace_product(cal_a * cal_a, state) - mean_cal_a * mean_cal_a,
      "moments sigma(calA)");
  m.sigma_cal_b = sqrt_clamped(
      real_trace_product(cal_b * cal_b, state) - mean_cal_b * mean_cal_b,
      "moments sigma(calB)");
  m.sigma_cal_a_positive = m.sigma_cal_a >= kSigmaCalFloor;
  m.sigma_cal_b_positive = m.sigma_cal_b >= kSigmaCalFloor;

  m.delta_a = real_trace_product(
      cal_a - tensor(a.matrix(), probe_id), state);
  m.delta_b = real_trace_product(
      cal_b - tensor(b.matrix(), probe_id), state);

  // Variance decomposition: the second moment dominates the squared bias.
  if (m.eps_a * m.eps_a - m.delta_a * m.delta_a < -1e-10 ||
      m.eps_b * m.eps_b - m.delta_b * m.delta_b < -1e-10) {
    throw ValidationError("moments: eps^2 < delta^2, inconsistent inputs");
  }
  return m;
}

FirstMoments first_moment_operators(const MeasuringProcess& p,
                                    const Observable& a, const Observable& b) {
  const ComplexMatrix n = error_observable(p, a).matrix();
  const ComplexMatrix d = disturbance_observable(p, b).matrix();
  const Eigen::Index ds = p.sys_dim();
  const Eigen::Index dp = p.probe_dim();
  const ComplexVector& xi = p.probe_state();

  auto contract = [&](const ComplexMatrix& composite) {
    ComplexMatrix out = ComplexMatrix::Zero(ds, ds);
    for (Eigen::Index i = 0; i < ds; ++i) {
      for (Eigen::Index j = 0; j < ds; ++j) {
        Complex sum = 0.0;
        for (Eigen::Index k = 0; k < dp; ++k) {
          for (Eigen::Index l = 0; l < dp; ++l) {
            sum += std::conj(xi(k)) * composite(i * dp + k, j * dp + l) * xi(l);
          }
        }
        out(i, j) = sum;
      }
    }
    return out;
  };

  return FirstMoments{Observable(contract(n)), Observable(contract(d))};
}

}  // namespace edr
