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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "edr/qmodel.hpp"
#include "edr/sampling.hpp"
#include "test_support.hpp"

using namespace edr;
using test::max_abs_diff;
using test::mat2;

namespace {

// Small-integer random matrix: entrywise products are exact in floating
// point, which the associativity check relies on.
ComplexMatrix random_integer_matrix(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_int_distribution<int> pick(-2, 2);
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = Complex(pick(rng), pick(rng));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("tensor: identity and diagonal cases") {
  CHECK(max_abs_diff(tensor(identity(2), identity(2)), identity(4)) == 0.0);

  const ComplexMatrix z = pauli_z().matrix();
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(max_abs_diff(tensor(z, identity(2)), expected) == 0.0);
}

TEST_CASE("tensor: X (x) Z blocks") {
  // Expanding the Kronecker definition by hand: [[0, Z], [Z, 0]].
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 2) = 1.0;
  expected(1, 3) = -1.0;
  expected(2, 0) = 1.0;
  expected(3, 1) = -1.0;
  CHECK(max_abs_diff(tensor(pauli_x().matrix(), pauli_z().matrix()),
                     expected) == 0.0);
}

TEST_CASE("tensor: associativity is exact on integer entries") {
  std::mt19937_64 rng = substream(7, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_integer_matrix(rng, 2);
    const ComplexMatrix b = random_integer_matrix(rng, 3);
    const ComplexMatrix c = random_integer_matrix(rng, 2);
    CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) ==
          0.0);
  }
}

TEST_CASE("tensor: mixed product with identity") {
  std::mt19937_64 rng = substream(7, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_gaussian_complex(rng, 3, 3);
    const ComplexMatrix b = random_gaussian_complex(rng, 3, 3);
    const ComplexMatrix lhs = tensor(a, identity(2)) * tensor(b, identity(2));
    const ComplexMatrix rhs = tensor(ComplexMatrix(a * b), identity(2));
    CHECK(max_abs_diff(lhs, rhs) <= 1e-13);
  }
}

TEST_CASE("partial_trace: product states and the maximally mixed state") {
  const ComplexMatrix z = pauli_z().matrix();
  const ComplexMatrix zi = tensor(z, 0.5 * identity(2));
  CHECK(max_abs_diff(partial_trace(zi, 2, 2, Factor::second), z) <= 1e-12);
  CHECK(max_abs_diff(partial_trace(0.25 * identity(4), 2, 2, Factor::first),
                     0.5 * identity(2)) <= 1e-12);
}

TEST_CASE("partial_trace: Bell projector reduces to I/2") {
  ComplexVector bell(4);
  bell << 1.0 / std::numbers::sqrt2, 0.0, 0.0, 1.0 / std::numbers::sqrt2;
  const ComplexMatrix projector = bell * bell.adjoint();
  CHECK(max_abs_diff(partial_trace(projector, 2, 2, Factor::second),
                     0.5 * identity(2)) <= 1e-12);
}

TEST_CASE("partial_trace: trace preservation and tensor contraction") {
  std::mt19937_64 rng = substream(7, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_gaussian_complex(rng, 2, 2);
    const ComplexMatrix b = random_gaussian_complex(rng, 3, 3);
    const ComplexMatrix ab = tensor(a, b);
    const ComplexMatrix reduced = partial_trace(ab, 2, 3, Factor::second);
    CHECK(max_abs_diff(reduced, ComplexMatrix(b.trace() * a)) <= 1e-12);
    CHECK(std::abs((reduced.trace() - ab.trace())) <= 1e-12);
  }
}

TEST_CASE("partial_trace: dimension mismatch rejected") {
  CHECK_THROWS_AS(partial_trace(identity(6), 2, 2, Factor::first),
                  DimensionError);
}

TEST_CASE("eig_hermitian: Pauli Z and X") {
  const HermitianEig z = eig_hermitian(pauli_z().matrix());
  CHECK(z.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(z.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(z.eigenvectors(1, 0)) == doctest::Approx(1.0));  // |1>
  CHECK(std::abs(z.eigenvectors(0, 1)) == doctest::Approx(1.0));  // |0>

  const HermitianEig x = eig_hermitian(pauli_x().matrix());
  CHECK(x.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(x.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));
  const double h = 1.0 / std::numbers::sqrt2;  // Hadamard columns
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      CHECK(std::abs(x.eigenvectors(i, j)) == doctest::Approx(h));
    }
  }
}

TEST_CASE("eig_hermitian: zero matrix and reconstruction") {
  const HermitianEig zero = eig_hermitian(ComplexMatrix::Zero(3, 3));
  CHECK(zero.eigenvalues.cwiseAbs().maxCoeff() == 0.0);
  CHECK(is_unitary(zero.eigenvectors, 1e-12));

  std::mt19937_64 rng = substream(7, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix h = random_hermitian_matrix(rng, 4);
    const HermitianEig eig = eig_hermitian(h);
    const ComplexMatrix reconstructed =
        eig.eigenvectors *
        eig.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
        eig.eigenvectors.adjoint();
    const double budget =
        1e-10 * (1.0 + eig.eigenvalues.cwiseAbs().maxCoeff());
    CHECK((reconstructed - h).norm() <= budget);
    for (Eigen::Index i = 1; i < eig.eigenvalues.size(); ++i) {
      CHECK(eig.eigenvalues(i - 1) <= eig.eigenvalues(i));
    }
  }
}

TEST_CASE("eig_hermitian: non-Hermitian input rejected") {
  CHECK_THROWS_AS(eig_hermitian(mat2(0, 1, 0, 0)), ValidationError);
}

TEST_CASE("sqrt_psd: scalar and diagonal cases") {
  CHECK(max_abs_diff(sqrt_psd(0.5 * identity(2)),
                     identity(2) / std::numbers::sqrt2) <= 1e-12);
  CHECK(max_abs_diff(sqrt_psd(mat2(4, 0, 0, 9)), mat2(2, 0, 0, 3)) <= 1e-12);
}

TEST_CASE("sqrt_psd: squares back to the input on random density matrices") {
  for (int trial = 0; trial < 100; ++trial) {
    std::mt19937_64 rng = substream(11, trial);
    const ComplexMatrix rho = random_density(rng, 3).matrix();
    const ComplexMatrix s = sqrt_psd(rho);
    CHECK((s * s - rho).norm() <= 1e-10 * (1.0 + rho.norm()));
    CHECK(hermitian_check(s).passes());
    CHECK(eig_hermitian(s).eigenvalues.minCoeff() >= -1e-12);
  }
}

TEST_CASE("sqrt_psd: rejects matrices with genuinely negative eigenvalues") {
  CHECK_THROWS_AS(sqrt_psd(mat2(1, 0, 0, -1)), ValidationError);
}

TEST_CASE("polar_selfadjoint: diagonal, zero, and Pauli Y cases") {
  const SelfAdjointPolar diag = polar_selfadjoint(mat2(2, 0, 0, -3));
  CHECK(max_abs_diff(diag.w, mat2(1, 0, 0, -1)) <= 1e-12);
  CHECK(max_abs_diff(diag.absval, mat2(2, 0, 0, 3)) <= 1e-12);

  const SelfAdjointPolar zero = polar_selfadjoint(ComplexMatrix::Zero(2, 2));
  CHECK(max_abs_diff(zero.w, identity(2)) <= 1e-12);  // kernel convention
  CHECK(zero.absval.cwiseAbs().maxCoeff() <= 1e-12);

  const ComplexMatrix y = pauli_y().matrix();
  const SelfAdjointPolar polar_y = polar_selfadjoint(y);
  CHECK(max_abs_diff(polar_y.w, y) <= 1e-12);
  CHECK(max_abs_diff(polar_y.absval, identity(2)) <= 1e-12);
}

TEST_CASE("polar_selfadjoint: properties on random Hermitian matrices") {
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng = substream(13, trial);
    const ComplexMatrix h = random_hermitian_matrix(rng, 4);
    const SelfAdjointPolar polar = polar_selfadjoint(h);
    CHECK((polar.w * polar.w - identity(4)).norm() <= 1e-10);
    CHECK(hermitian_check(polar.w).passes());
    CHECK((polar.w * h - polar.absval).norm() <= 1e-10);

    RealVector abs_spectrum = eig_hermitian(h).eigenvalues.cwiseAbs();
    std::sort(abs_spectrum.data(), abs_spectrum.data() + abs_spectrum.size());
    const RealVector absval_spectrum = eig_hermitian(polar.absval).eigenvalues;
    CHECK((abs_spectrum - absval_spectrum).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("trace_norm: fixed values") {
  CHECK(trace_norm(pauli_y().matrix()) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(trace_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = -3.0;
  CHECK(trace_norm(d) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK_THROWS_AS(trace_norm(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("trace_norm: eigenvalue sum and unitary invariance") {
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng = substream(17, trial);
    const ComplexMatrix h = random_hermitian_matrix(rng, 4);
    CHECK(std::abs(trace_norm(h) -
                   eig_hermitian(h).eigenvalues.cwiseAbs().sum()) <= 1e-10);
    const ComplexMatrix u = random_unitary(rng, 4);
    CHECK(std::abs(trace_norm(ComplexMatrix(u * h * u.adjoint())) -
                   trace_norm(h)) <= 1e-9);
  }
}

TEST_CASE("commutator: Pauli algebra and trivial cases") {
  // ZX - XZ = 2iY, expanded entrywise by hand.
  const ComplexMatrix expected = mat2(0, 2, -2, 0);
  CHECK(max_abs_diff(commutator(pauli_z().matrix(), pauli_x().matrix()),
                     expected) == 0.0);
  CHECK(commutator(pauli_z().matrix(), pauli_z().matrix())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK(commutator(identity(2), pauli_x().matrix()).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK_THROWS_AS(commutator(identity(2), identity(3)), DimensionError);
}

TEST_CASE("commutator: anti-Hermitian for Hermitian operands") {
  std::mt19937_64 rng = substream(17, 1000);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian_matrix(rng, 3);
    const ComplexMatrix b = random_hermitian_matrix(rng, 3);
    const ComplexMatrix c = commutator(a, b);
    CHECK((c + c.adjoint()).norm() <= 1e-12 * (1.0 + c.norm()));
  }
}

TEST_CASE("trace_norm handles non-Hermitian input via singular values") {
  CHECK(trace_norm(test::mat2(0, 1, 0, 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 rng = substream(17, 2000);
  const ComplexMatrix g = random_gaussian_complex(rng, 3, 3);
  Eigen::JacobiSVD<ComplexMatrix> svd(g);
  CHECK(std::abs(trace_norm(g) - svd.singularValues().sum()) <= 1e-10);
}

TEST_CASE("hermitian_check reports the largest asymmetry") {
  ComplexMatrix m = mat2(1, Complex(0, 1), Complex(0, 1), 1);
  const HermitianCheck check = hermitian_check(m, 1e-10);
  CHECK(check.max_asymmetry == doctest::Approx(2.0));
  CHECK(!check.passes());
  CHECK(hermitian_check(pauli_y().matrix()).passes());
}
