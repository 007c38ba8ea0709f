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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "edr/sampling.hpp"
#include "edr/spinlab.hpp"
#include "test_support.hpp"

using namespace edr;
using test::max_abs_diff;
using test::mat2;

namespace {

ComplexVector ket0() {
  ComplexVector v(2);
  v << 1.0, 0.0;
  return v;
}

ComplexVector ket1() {
  ComplexVector v(2);
  v << 0.0, 1.0;
  return v;
}

// U = I, meter Z', probe |0'>: the meter simply reads out nothing happened.
MeasuringProcess trivial_process() {
  return MeasuringProcess(2, 2, ket0(), identity(4), pauli_z());
}

}  // namespace

TEST_CASE("constructors validate their invariants") {
  CHECK_THROWS_AS(Observable(mat2(0, 1, 0, 0)), ValidationError);
  CHECK_THROWS_AS(DensityOperator(mat2(1, 0, 0, 1)), ValidationError);
  CHECK_THROWS_AS(DensityOperator(mat2(1.5, 0, 0, -0.5)), ValidationError);

  ComplexVector bad_xi(2);
  bad_xi << 1.0, 1.0;
  CHECK_THROWS_AS(
      MeasuringProcess(2, 2, bad_xi, identity(4), pauli_z()),
      ValidationError);
  CHECK_THROWS_AS(
      MeasuringProcess(2, 2, ket0(), ComplexMatrix(2.0 * identity(4)),
                       pauli_z()),
      ValidationError);

  // Non-commuting composite pair is rejected at construction.
  CHECK_THROWS_AS(
      JointModel(2, 2, ket0(),
                 Observable(tensor(pauli_x().matrix(), identity(2))),
                 Observable(tensor(pauli_z().matrix(), identity(2)))),
      ValidationError);
}

TEST_CASE("DensityOperator clips round-off negatives, rejects real ones") {
  // An eigenvalue inside the clipping window is repaired to 0.
  const DensityOperator ok(test::mat2(1.0 + 1e-13, 0, 0, -1e-13));
  CHECK(ok.eigenvalues().minCoeff() == 0.0);
  CHECK((ok.sqrt_matrix() * ok.sqrt_matrix() - ok.matrix()).norm() <= 1e-10);
  CHECK_THROWS_AS(DensityOperator(test::mat2(1.0 + 1e-9, 0, 0, -1e-9)),
                  ValidationError);
}

TEST_CASE("DensityOperator caches a consistent square root") {
  std::mt19937_64 rng = substream(23, 0);
  const DensityOperator rho = random_density(rng, 3);
  const ComplexMatrix& s = rho.sqrt_matrix();
  CHECK((s * s - rho.matrix()).norm() <= 1e-10);
  CHECK(rho.eigenvalues().minCoeff() >= 0.0);
}

TEST_CASE("evolution: identity interaction leaves operators in place") {
  const MeasuringProcess p = trivial_process();
  CHECK(max_abs_diff(evolve_system(p, pauli_x()).matrix(),
                     tensor(pauli_x().matrix(), identity(2))) <= 1e-12);
  CHECK(max_abs_diff(evolve_meter(p).matrix(),
                     tensor(identity(2), pauli_z().matrix())) <= 1e-12);
}

TEST_CASE("evolution: spin model at theta = 0") {
  const MeasuringProcess p = build_spin_model({0.0});
  const ComplexMatrix z = pauli_z().matrix();
  const ComplexMatrix x = pauli_x().matrix();
  // Conjugating I (x) Z' through the full U = C[X'] (I (x) Z') gives Z (x) Z'.
  CHECK(max_abs_diff(evolve_meter(p).matrix(), tensor(z, z)) <= 1e-12);
  // For X (x) I the rotation factor flips the sign: the result is -X (x) X'.
  CHECK(max_abs_diff(evolve_system(p, pauli_x()).matrix(),
                     ComplexMatrix(-tensor(x, x))) <= 1e-12);
}

TEST_CASE("error and disturbance observables") {
  const MeasuringProcess trivial = trivial_process();
  const ComplexMatrix z = pauli_z().matrix();
  const ComplexMatrix x = pauli_x().matrix();
  const ComplexMatrix id = identity(2);

  CHECK(max_abs_diff(error_observable(trivial, pauli_z()).matrix(),
                     ComplexMatrix(tensor(id, z) - tensor(z, id))) <= 1e-12);
  CHECK(max_abs_diff(
            error_observable(trivial, Observable(ComplexMatrix::Zero(2, 2)))
                .matrix(),
            evolve_meter(trivial).matrix()) <= 1e-12);
  CHECK(disturbance_observable(trivial, pauli_x()).matrix().norm() <= 1e-12);
  CHECK(disturbance_observable(build_spin_model({0.7}), identity_observable(2))
            .matrix()
            .norm() <= 1e-12);

  const MeasuringProcess spin0 = build_spin_model({0.0});
  CHECK(max_abs_diff(error_observable(spin0, pauli_z()).matrix(),
                     tensor(z, ComplexMatrix(z - id))) <= 1e-12);
  CHECK(max_abs_diff(disturbance_observable(spin0, pauli_x()).matrix(),
                     ComplexMatrix(-tensor(x, ComplexMatrix(x + id)))) <=
        1e-12);
}

TEST_CASE("rms error: meter agreeing or disagreeing with the state") {
  const MeasuringProcess p = trivial_process();
  CHECK(rms_error(p, pauli_z(), DensityOperator::pure(ket0())) <= 1e-12);
  // eps^2 = 2 - 2<Z> = 4 for rho = |1><1|.
  CHECK(rms_error(p, pauli_z(), DensityOperator::pure(ket1())) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rms_disturbance(p, pauli_x(), DensityOperator::maximally_mixed(2)) <=
        1e-12);
}

TEST_CASE("rms error/disturbance: spin closed forms for any state") {
  for (int trial = 0; trial < 25; ++trial) {
    std::mt19937_64 rng = substream(29, trial);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2.0);
    const double theta = angle(rng);
    const MeasuringProcess p = build_spin_model({theta});
    const DensityOperator rho = random_density(rng, 2);
    CHECK(rms_error(p, pauli_z(), rho) ==
          doctest::Approx(2.0 * std::abs(std::sin(theta))).epsilon(1e-10));
    CHECK(rms_disturbance(p, pauli_x(), rho) ==
          doctest::Approx(2.0 *
                          std::abs(std::sin(std::numbers::pi / 4.0 - theta)))
              .epsilon(1e-10));
  }
}

TEST_CASE("std_dev fixed values") {
  CHECK(std_dev(pauli_z(), DensityOperator::maximally_mixed(2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std_dev(pauli_z(), DensityOperator::pure(ket0())) <= 1e-12);
  CHECK(std_dev(pauli_x(), DensityOperator::pure(ket0())) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("to_joint_model carries the evolved pair") {
  const JointModel trivial = to_joint_model(trivial_process(), pauli_x());
  CHECK(max_abs_diff(trivial.cal_a().matrix(),
                     tensor(identity(2), pauli_z().matrix())) <= 1e-12);
  CHECK(max_abs_diff(trivial.cal_b().matrix(),
                     tensor(pauli_x().matrix(), identity(2))) <= 1e-12);

  const JointModel spin0 = to_joint_model(build_spin_model({0.0}), pauli_x());
  CHECK(max_abs_diff(spin0.cal_a().matrix(),
                     tensor(pauli_z().matrix(), pauli_z().matrix())) <= 1e-12);
  CHECK(max_abs_diff(
            spin0.cal_b().matrix(),
            ComplexMatrix(-tensor(pauli_x().matrix(), pauli_x().matrix()))) <=
        1e-12);
}

TEST_CASE("joint rms errors reproduce the process error and disturbance") {
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng = substream(31, trial);
    const Eigen::Index ds = 2 + (trial % 2);
    const Eigen::Index dp = 2 + ((trial / 2) % 2);
    const MeasuringProcess p = random_process(rng, ds, dp, false);
    const Observable a = random_observable(rng, ds);
    const Observable b = random_observable(rng, ds);
    const DensityOperator rho = random_density(rng, ds);
    const JointModel j = to_joint_model(p, b);
    CHECK(std::abs(joint_rms_error(j, a, Channel::A, rho) -
                   rms_error(p, a, rho)) <= 1e-10);
    CHECK(std::abs(joint_rms_error(j, b, Channel::B, rho) -
                   rms_disturbance(p, b, rho)) <= 1e-10);
  }
}

TEST_CASE("joint rms error: perfect channel and pure bias") {
  std::mt19937_64 rng = substream(31, 1000);
  const Observable a = random_observable(rng, 2);
  const DensityOperator rho = random_density(rng, 2);
  const ComplexVector xi = ket0();

  const JointModel perfect(
      2, 2, xi, Observable(tensor(a.matrix(), identity(2))),
      Observable(tensor(a.matrix(), identity(2))));
  CHECK(joint_rms_error(perfect, a, Channel::A, rho) <= 1e-12);

  const double c = -0.75;
  const ComplexMatrix biased = a.matrix() + c * identity(2);
  const JointModel shifted(2, 2, xi,
                           Observable(tensor(biased, identity(2))),
                           Observable(tensor(biased, identity(2))));
  CHECK(joint_rms_error(shifted, a, Channel::A, rho) ==
        doctest::Approx(std::abs(c)).epsilon(1e-12));
  const MomentSet m = moments(shifted, a, a, rho);
  CHECK(m.delta_a == doctest::Approx(c).epsilon(1e-12));
}

TEST_CASE("moments on the spin family at the maximally mixed state") {
  for (double theta : {0.0, 0.3, std::numbers::pi / 8.0}) {
    const JointModel j = to_joint_model(build_spin_model({theta}), pauli_x());
    const MomentSet m =
        moments(j, pauli_z(), pauli_x(), DensityOperator::maximally_mixed(2));
    CHECK(std::abs(m.delta_a) <= 1e-12);
    CHECK(std::abs(m.delta_b) <= 1e-12);
    CHECK(m.sigma_cal_a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.sigma_cal_b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.sigma_cal_a_positive);
    CHECK(m.sigma_cal_b_positive);
  }
}

TEST_CASE("moments flags vanishing output fluctuation") {
  const ComplexVector xi = ket0();
  const JointModel degenerate(2, 2, xi, identity_observable(4),
                              Observable(tensor(pauli_z().matrix(),
                                                identity(2))));
  const MomentSet m = moments(degenerate, pauli_z(), pauli_z(),
                              DensityOperator::maximally_mixed(2));
  CHECK(!m.sigma_cal_a_positive);
  CHECK(m.sigma_cal_b_positive);
}

TEST_CASE("first moment operators: contraction examples") {
  const FirstMoments trivial =
      first_moment_operators(trivial_process(), pauli_z(), pauli_x());
  CHECK(max_abs_diff(trivial.error.matrix(),
                     ComplexMatrix(identity(2) - pauli_z().matrix())) <=
        1e-12);
  CHECK(trivial.disturbance.matrix().norm() <= 1e-12);

  const FirstMoments spin0 =
      first_moment_operators(build_spin_model({0.0}), pauli_z(), pauli_x());
  CHECK(spin0.error.matrix().norm() <= 1e-12);
}

TEST_CASE("first-moment consistency: delta(A) = Tr[n(A) rho]") {
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng = substream(37, trial);
    const Eigen::Index ds = 2 + (trial % 2);
    const Eigen::Index dp = 2 + ((trial / 2) % 2);
    const MeasuringProcess p = random_process(rng, ds, dp, false);
    const Observable a = random_observable(rng, ds);
    const Observable b = random_observable(rng, ds);
    const DensityOperator rho = random_density(rng, ds);

    const FirstMoments fm = first_moment_operators(p, a, b);
    const MomentSet m = moments(to_joint_model(p, b), a, b, rho);
    CHECK(std::abs(m.delta_a - expectation(fm.error, rho)) <= 1e-10);
    CHECK(std::abs(m.delta_b - expectation(fm.disturbance, rho)) <= 1e-10);
    CHECK(m.eps_a * m.eps_a >= m.delta_a * m.delta_a - 1e-10);
    CHECK(m.eps_b * m.eps_b >= m.delta_b * m.delta_b - 1e-10);
  }
}

TEST_CASE("unitary invariance of all moment quantities") {
  for (int trial = 0; trial < 25; ++trial) {
    std::mt19937_64 rng = substream(41, trial);
    const Eigen::Index ds = 2 + (trial % 2);
    const Eigen::Index dp = 2 + ((trial / 2) % 2);
    const MeasuringProcess p = random_process(rng, ds, dp, false);
    const Observable a = random_observable(rng, ds);
    const Observable b = random_observable(rng, ds);
    const DensityOperator rho = random_density(rng, ds);

    const ComplexMatrix v = random_unitary(rng, ds);
    const ComplexMatrix vp = random_unitary(rng, dp);
    const ComplexMatrix vv = tensor(v, vp);
    auto conj_sys = [&](const ComplexMatrix& m) {
      ComplexMatrix out = v * m * v.adjoint();
      return ComplexMatrix(0.5 * (out + out.adjoint().eval()));
    };
    const MeasuringProcess rotated(
        ds, dp, ComplexVector(vp * p.probe_state()),
        ComplexMatrix(vv * p.interaction() * vv.adjoint()),
        Observable(ComplexMatrix(
            0.5 * ((vp * p.meter().matrix() * vp.adjoint()) +
                   (vp * p.meter().matrix() * vp.adjoint()).adjoint().eval()))));
    const Observable a_rot(conj_sys(a.matrix()));
    const Observable b_rot(conj_sys(b.matrix()));
    ComplexMatrix rho_rot_m = v * rho.matrix() * v.adjoint();
    rho_rot_m = 0.5 * (rho_rot_m + rho_rot_m.adjoint().eval());
    rho_rot_m /= rho_rot_m.trace().real();
    const DensityOperator rho_rot(rho_rot_m);

    const MomentSet base = moments(to_joint_model(p, b), a, b, rho);
    const MomentSet rot =
        moments(to_joint_model(rotated, b_rot), a_rot, b_rot, rho_rot);
    CHECK(std::abs(base.eps_a - rot.eps_a) <= 1e-9);
    CHECK(std::abs(base.eps_b - rot.eps_b) <= 1e-9);
    CHECK(std::abs(base.sigma_a - rot.sigma_a) <= 1e-9);
    CHECK(std::abs(base.sigma_b - rot.sigma_b) <= 1e-9);
    CHECK(std::abs(base.sigma_cal_a - rot.sigma_cal_a) <= 1e-9);
    CHECK(std::abs(base.sigma_cal_b - rot.sigma_cal_b) <= 1e-9);
    CHECK(std::abs(base.delta_a - rot.delta_a) <= 1e-9);
    CHECK(std::abs(base.delta_b - rot.delta_b) <= 1e-9);
  }
}

TEST_CASE("binary scenarios keep errors inside [0, 2]") {
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng = substream(43, trial);
    const Eigen::Index ds = 2 + (trial % 2);
    const Eigen::Index dp = 2 + ((trial / 2) % 2);
    const MeasuringProcess p = random_process(rng, ds, dp, true);
    const BinaryScenario scenario = random_binary_scenario(rng, ds);
    const double eps = rms_error(p, scenario.a, scenario.rho);
    const double eta = rms_disturbance(p, scenario.b, scenario.rho);
    CHECK(eps >= 0.0);
    CHECK(eps <= 2.0 + 1e-10);
    CHECK(eta >= 0.0);
    CHECK(eta <= 2.0 + 1e-10);
    CHECK(std::abs(expectation(scenario.a, scenario.rho)) <= 1e-10);
    CHECK(std::abs(expectation(scenario.b, scenario.rho)) <= 1e-10);
  }
}
