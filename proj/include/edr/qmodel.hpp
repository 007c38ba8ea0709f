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

#ifndef EDRLAB_QMODEL_HPP
#define EDRLAB_QMODEL_HPP

#include "edr/linalg.hpp"

namespace edr {

/// Self-adjoint matrix representing a physical observable. Validated
/// Hermitian at construction; immutable afterwards.
class Observable {
 public:
  explicit Observable(ComplexMatrix matrix);

  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

Observable pauli_x();
Observable pauli_y();
Observable pauli_z();
Observable identity_observable(Eigen::Index dim);

/// Trace-one positive matrix with cached spectral data and square root.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix rho);

  static DensityOperator pure(const ComplexVector& psi);
  static DensityOperator maximally_mixed(Eigen::Index dim);
  /// (I + x X + y Y + z Z)/2 for a Bloch vector with |r| <= 1.
  static DensityOperator qubit_bloch(double x, double y, double z);

  Eigen::Index dim() const { return rho_.rows(); }
  const ComplexMatrix& matrix() const { return rho_; }
  const ComplexMatrix& sqrt_matrix() const { return sqrt_rho_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }  // ascending
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

 private:
  ComplexMatrix rho_;
  ComplexMatrix sqrt_rho_;
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// Indirect-measurement model (K, |xi>, U, M): probe dimension, pure probe
/// state, system-probe interaction unitary on sys (x) probe, and the meter
/// observable read out on the probe.
class MeasuringProcess {
 public:
  MeasuringProcess(Eigen::Index sys_dim, Eigen::Index probe_dim,
                   ComplexVector probe_state, ComplexMatrix interaction,
                   Observable meter);

  Eigen::Index sys_dim() const { return sys_dim_; }
  Eigen::Index probe_dim() const { return probe_dim_; }
  const ComplexVector& probe_state() const { return probe_state_; }
  const ComplexMatrix& interaction() const { return interaction_; }
  const Observable& meter() const { return meter_; }

 private:
  Eigen::Index sys_dim_;
  Eigen::Index probe_dim_;
  ComplexVector probe_state_;
  ComplexMatrix interaction_;
  Observable meter_;
};

/// Joint measurement model (K, |xi>, calA, calB): a pair of mutually
/// commuting composite observables approximating a simultaneous measurement.
class JointModel {
 public:
  JointModel(Eigen::Index sys_dim, Eigen::Index probe_dim,
             ComplexVector probe_state, Observable cal_a, Observable cal_b);

  Eigen::Index sys_dim() const { return sys_dim_; }
  Eigen::Index probe_dim() const { return probe_dim_; }
  const ComplexVector& probe_state() const { return probe_state_; }
  const Observable& cal_a() const { return cal_a_; }
  const Observable& cal_b() const { return cal_b_; }

 private:
  Eigen::Index sys_dim_;
  Eigen::Index probe_dim_;
  ComplexVector probe_state_;
  Observable cal_a_;
  Observable cal_b_;
};

/// First and second moments of a joint model against (A, B, rho).
/// For a measuring process, eps_b is the rms disturbance eta(B).
struct MomentSet {
  double eps_a = 0.0;
  double eps_b = 0.0;
  double sigma_a = 0.0;
  double sigma_b = 0.0;
  double sigma_cal_a = 0.0;  // std dev of calA in rho (x) |xi><xi|
  double sigma_cal_b = 0.0;
  double delta_a = 0.0;  // first-moment bias of the A channel
  double delta_b = 0.0;
  bool sigma_cal_a_positive = true;  // >= 1e-10, needed by GETRM
  bool sigma_cal_b_positive = true;
};

/// rho (x) |xi><xi| on the composite space.
ComplexMatrix composite_state(const DensityOperator& rho,
                              const ComplexVector& probe_state);

/// Heisenberg picture after the interaction: U† (I (x) M) U.
Observable evolve_meter(const MeasuringProcess& p);
/// Heisenberg picture after the interaction: U† (B (x) I) U.
Observable evolve_system(const MeasuringProcess& p, const Observable& b);

/// N(A) = M(dt) - A (x) I on the composite space.
Observable error_observable(const MeasuringProcess& p, const Observable& a);
/// D(B) = B(dt) - B (x) I on the composite space.
Observable disturbance_observable(const MeasuringProcess& p,
                                  const Observable& b);

/// eps(A) = Tr[N(A)² rho (x) |xi><xi|]^(1/2).
double rms_error(const MeasuringProcess& p, const Observable& a,
                 const DensityOperator& rho);
/// eta(B) = Tr[D(B)² rho (x) |xi><xi|]^(1/2).
double rms_disturbance(const MeasuringProcess& p, const Observable& b,
                       const DensityOperator& rho);

double expectation(const Observable& a, const DensityOperator& rho);
double std_dev(const Observable& a, const DensityOperator& rho);

/// The joint model (K, |xi>, M(dt), B(dt)) carried by a measuring process;
/// its joint rms errors reproduce (eps(A), eta(B)).
JointModel to_joint_model(const MeasuringProcess& p, const Observable& b);

enum class Channel { A, B };

double joint_rms_error(const JointModel& j, const Observable& target,
                       Channel channel, const DensityOperator& rho);

/// All eight moment quantities, populated consistently.
MomentSet moments(const JointModel& j, const Observable& a,
                  const Observable& b, const DensityOperator& rho);

struct FirstMoments {
  Observable error;        // n(A), a system observable
  Observable disturbance;  // d(B), a system observable
};

/// System observables representing the first moments of error and
/// disturbance: n(A) is the probe-state contraction of N(A), the unique
/// system operator with <phi|n(A)|psi> = <phi,xi|N(A)|psi,xi>; d(B) likewise.
FirstMoments first_moment_operators(const MeasuringProcess& p,
                                    const Observable& a, const Observable& b);

}  // namespace edr

#endif  // EDRLAB_QMODEL_HPP
