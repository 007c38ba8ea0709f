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

#ifndef EDRLAB_LINALG_HPP
#define EDRLAB_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace edr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Thrown when operands have incompatible shapes.
class DimensionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates a structural contract (non-Hermitian,
/// non-positive, non-unit, inconsistent radicand, ...).
class ValidationError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Result of testing a matrix for Hermiticity against a tolerance.
struct HermitianCheck {
  double max_asymmetry = 0.0;  // largest |m(i,j) - conj(m(j,i))|
  double tolerance = 0.0;
  bool passes() const { return max_asymmetry <= tolerance; }
};

/// 1e-10 scaled by (1 + Frobenius norm). Inputs failing it are rejected,
/// never silently symmetrized.
double default_hermitian_tolerance(const ComplexMatrix& m);

HermitianCheck hermitian_check(const ComplexMatrix& m, double tolerance);
HermitianCheck hermitian_check(const ComplexMatrix& m);

double unitary_deviation(const ComplexMatrix& m);  // max |(U†U - I)(i,j)|
bool is_unitary(const ComplexMatrix& m, double tolerance = 1e-10);

void require_square(const ComplexMatrix& m, const std::string& what);
void require_finite(const ComplexMatrix& m, const std::string& what);
void require_hermitian(const ComplexMatrix& m, const std::string& what);

ComplexMatrix identity(Eigen::Index dim);

/// Kronecker product with block ordering (i,k),(j,l) -> a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Factor { first, second };

/// Trace out `which` factor of a matrix on a (dim_first x dim_second)
/// bipartite space; returns the reduced matrix on the retained factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index dim_first,
                            Eigen::Index dim_second, Factor which);

struct HermitianEig {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // columns; unitary
};

/// Spectral decomposition h = V diag(lambda) V† of a Hermitian matrix.
/// Degenerate-subspace bases are unconstrained; callers must not rely on
/// individual eigenvectors inside a degenerate cluster.
HermitianEig eig_hermitian(const ComplexMatrix& h);

/// PSD square root. Eigenvalues in [-1e-12, 0) are clipped to 0; anything
/// more negative rejects the input as non-PSD.
ComplexMatrix sqrt_psd(const ComplexMatrix& h);

struct SelfAdjointPolar {
  ComplexMatrix w;       // self-adjoint unitary; identity on the kernel of h
  ComplexMatrix absval;  // |h|, PSD
};

/// Polar data of a Hermitian matrix: w = sign(h) on the support, w = I on
/// the kernel, so that w * h = |h| and w² = I.
SelfAdjointPolar polar_selfadjoint(const ComplexMatrix& h);

/// Sum of singular values (sum of |eigenvalues| for Hermitian input).
double trace_norm(const ComplexMatrix& m);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace edr

#endif  // EDRLAB_LINALG_HPP
