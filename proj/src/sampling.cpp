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

#include "edr/sampling.hpp"

#include <cmath>
#include <numbers>

namespace edr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Dirichlet(1,...,1) point on the probability simplex.
RealVector random_simplex(std::mt19937_64& rng, Eigen::Index dim) {
  std::exponential_distribution<double> exp1(1.0);
  RealVector v(dim);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = exp1(rng);
    sum += v(i);
  }
  return v / sum;
}

// Unit vector v (in the eigenbasis columns of `basis`) whose rho-expectation
// hits 1/2 exactly: mixes a random simplex weight toward the eigenvector on
// the other side of 1/2.
ComplexVector half_expectation_vector(std::mt19937_64& rng,
                                      const RealVector& eigenvalues,
                                      const ComplexMatrix& basis) {
  const Eigen::Index dim = eigenvalues.size();
  RealVector weights = random_simplex(rng, dim);
  double value = weights.dot(eigenvalues);
  if (std::abs(value - 0.5) > 1e-15) {
    Eigen::Index anchor = 0;
    if (value < 0.5) {
      eigenvalues.maxCoeff(&anchor);  // lambda_max >= 1/2 by construction
    } else {
      eigenvalues.minCoeff(&anchor);  // lambda_min <= 1/dim < 1/2
    }
    const double t = (0.5 - value) / (eigenvalues(anchor) - value);
    weights = (1.0 - t) * weights;
    weights(anchor) += t;
  }
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ComplexVector coeffs(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    coeffs(i) = std::sqrt(std::max(weights(i), 0.0)) *
                std::exp(Complex(0.0, angle(rng)));
  }
  ComplexVector v = basis * coeffs;
  return v / v.norm();
}

}  // namespace

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

ComplexMatrix random_gaussian_complex(std::mt19937_64& rng, Eigen::Index rows,
                                      Eigen::Index cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

ComplexMatrix random_hermitian_matrix(std::mt19937_64& rng, Eigen::Index dim) {
  const ComplexMatrix g = random_gaussian_complex(rng, dim, dim);
  return 0.5 * (g + g.adjoint().eval());
}

Observable random_observable(std::mt19937_64& rng, Eigen::Index dim) {
  return Observable(random_hermitian_matrix(rng, dim));
}

ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
  const ComplexMatrix g = random_gaussian_complex(rng, dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    q.col(i) *= (mag > 0.0) ? diag / mag : Complex(1.0, 0.0);
  }
  return q;
}

ComplexVector random_unit_vector(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = Complex(gauss(rng), gauss(rng));
  }
  return v / v.norm();
}

DensityOperator random_density(std::mt19937_64& rng, Eigen::Index dim) {
  const ComplexMatrix g = random_gaussian_complex(rng, dim, dim);
  ComplexMatrix wishart = g * g.adjoint();
  wishart /= wishart.trace().real();
  // Exact Hermitian symmetrization of our own construction, so the state
  // passes validation regardless of accumulation order.
  wishart = 0.5 * (wishart + wishart.adjoint().eval());
  return DensityOperator(wishart);
}

DensityOperator random_pure_density(std::mt19937_64& rng, Eigen::Index dim) {
  return DensityOperator::pure(random_unit_vector(rng, dim));
}

Observable random_binary_meter(std::mt19937_64& rng, Eigen::Index dim) {
  if (dim < 2) {
    throw DimensionError("random_binary_meter: dimension must be >= 2");
  }
  std::bernoulli_distribution coin(0.5);
  RealVector signs(dim);
  signs(0) = 1.0;
  signs(1) = -1.0;  // both eigenvalues present, spectrum is exactly {+1,-1}
  for (Eigen::Index i = 2; i < dim; ++i) {
    signs(i) = coin(rng) ? 1.0 : -1.0;
  }
  const ComplexMatrix v = random_unitary(rng, dim);
  ComplexMatrix m = v * signs.asDiagonal().toDenseMatrix().cast<Complex>() *
                    v.adjoint();
  m = 0.5 * (m + m.adjoint().eval());
  return Observable(m);
}

BinaryScenario random_binary_scenario(std::mt19937_64& rng, Eigen::Index dim) {
  if (dim < 2) {
    throw DimensionError("random_binary_scenario: dimension must be >= 2");
  }
  // A zero-mean +-1 observable exists iff some unit vector has
  // rho-expectation 1/2, which needs lambda_max >= 1/2.
  RealVector eigenvalues;
  do {
    eigenvalues = random_simplex(rng, dim);
  } while (eigenvalues.maxCoeff() < 0.5);

  const ComplexMatrix basis = random_unitary(rng, dim);
  ComplexMatrix rho_matrix =
      basis * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
      basis.adjoint();
  rho_matrix = 0.5 * (rho_matrix + rho_matrix.adjoint().eval());
  rho_matrix /= rho_matrix.trace().real();
  DensityOperator rho(rho_matrix);

  const ComplexVector v = half_expectation_vector(rng, eigenvalues, basis);
  const ComplexVector w = half_expectation_vector(rng, eigenvalues, basis);
  const ComplexMatrix id = identity(dim);
  Observable a(ComplexMatrix(2.0 * (v * v.adjoint()) - id));
  Observable b(ComplexMatrix(2.0 * (w * w.adjoint()) - id));
  return BinaryScenario{std::move(a), std::move(b), std::move(rho)};
}

BinaryScenario random_circle_scenario(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> alpha_dist(-1.0, 1.0);
  const double alpha = alpha_dist(rng);
  const ComplexMatrix v = random_unitary(rng, 2);
  auto conjugate = [&](const ComplexMatrix& m) {
    ComplexMatrix out = v * m * v.adjoint();
    return ComplexMatrix(0.5 * (out + out.adjoint().eval()));
  };
  ComplexMatrix rho = conjugate(0.5 * (identity(2) + alpha * pauli_y().matrix()));
  rho /= rho.trace().real();
  return BinaryScenario{Observable(conjugate(pauli_z().matrix())),
                        Observable(conjugate(pauli_x().matrix())),
                        DensityOperator(rho)};
}

MeasuringProcess random_process(std::mt19937_64& rng, Eigen::Index sys_dim,
                                Eigen::Index probe_dim, bool binary_meter) {
  ComplexVector xi = random_unit_vector(rng, probe_dim);
  ComplexMatrix u = random_unitary(rng, sys_dim * probe_dim);
  Observable meter = binary_meter ? random_binary_meter(rng, probe_dim)
                                  : random_observable(rng, probe_dim);
  return MeasuringProcess(sys_dim, probe_dim, std::move(xi), std::move(u),
                          std::move(meter));
}

JointModel random_joint_model(std::mt19937_64& rng, Eigen::Index sys_dim,
                              Eigen::Index probe_dim, bool binary) {
  const Eigen::Index dim = sys_dim * probe_dim;
  const ComplexMatrix v = random_unitary(rng, dim);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  RealVector da(dim);
  RealVector db(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    da(i) = binary ? (coin(rng) ? 1.0 : -1.0) : gauss(rng);
    db(i) = binary ? (coin(rng) ? 1.0 : -1.0) : gauss(rng);
  }
  auto conjugated = [&](const RealVector& diag) {
    ComplexMatrix m =
        v * diag.asDiagonal().toDenseMatrix().cast<Complex>() * v.adjoint();
    return ComplexMatrix(0.5 * (m + m.adjoint().eval()));
  };
  return JointModel(sys_dim, probe_dim, random_unit_vector(rng, probe_dim),
                    Observable(conjugated(da)), Observable(conjugated(db)));
}

}  // namespace edr
