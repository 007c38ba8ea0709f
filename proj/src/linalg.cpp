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

#include "edr/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace edr {

namespace {
constexpr double kPsdEigenvalueFloor = -1e-12;
}  // namespace

double default_hermitian_tolerance(const ComplexMatrix& m) {
  return 1e-10 * (1.0 + m.norm());
}

HermitianCheck hermitian_check(const ComplexMatrix& m, double tolerance) {
  HermitianCheck check;
  check.tolerance = tolerance;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double asym = std::abs(m(i, j) - std::conj(m(j, i)));
      check.max_asymmetry = std::max(check.max_asymmetry, asym);
    }
  }
  return check;
}

HermitianCheck hermitian_check(const ComplexMatrix& m) {
  return hermitian_check(m, default_hermitian_tolerance(m));
}

double unitary_deviation(const ComplexMatrix& m) {
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - identity(m.cols())).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& m, double tolerance) {
  return m.rows() == m.cols() && unitary_deviation(m) <= tolerance;
}

void require_square(const ComplexMatrix& m, const std::string& what) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw DimensionError(what + ": matrix must be nonempty");
  }
  if (m.rows() != m.cols()) {
    throw DimensionError(what + ": matrix must be square, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

void require_finite(const ComplexMatrix& m, const std::string& what) {
  if (!m.allFinite()) {
    throw ValidationError(what + ": matrix has NaN/Inf entries");
  }
}

void require_hermitian(const ComplexMatrix& m, const std::string& what) {
  require_square(m, what);
  require_finite(m, what);
  const HermitianCheck check = hermitian_check(m);
  if (!check.passes()) {
    throw ValidationError(what + ": matrix is not Hermitian (asymmetry " +
                          std::to_string(check.max_asymmetry) + " > tolerance " +
                          std::to_string(check.tolerance) + ")");
  }
}

ComplexMatrix identity(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_finite(a, "tensor lhs");
  require_finite(b, "tensor rhs");
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index dim_first,
                            Eigen::Index dim_second, Factor which) {
  require_square(m, "partial_trace");
  if (dim_first < 1 || dim_second < 1 || m.rows() != dim_first * dim_second) {
    throw DimensionError("partial_trace: matrix dimension " +
                         std::to_string(m.rows()) + " is not " +
                         std::to_string(dim_first) + "*" +
                         std::to_string(dim_second));
  }
  if (which == Factor::second) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_first, dim_first);
    for (Eigen::Index i = 0; i < dim_first; ++i) {
      for (Eigen::Index j = 0; j < dim_first; ++j) {
        for (Eigen::Index k = 0; k < dim_second; ++k) {
          out(i, j) += m(i * dim_second + k, j * dim_second + k);
        }
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_second, dim_second);
  for (Eigen::Index k = 0; k < dim_second; ++k) {
    for (Eigen::Index l = 0; l < dim_second; ++l) {
      for (Eigen::Index i = 0; i < dim_first; ++i) {
        out(k, l) += m(i * dim_second + k, i * dim_second + l);
      }
    }
  }
  return out;
}

HermitianEig eig_hermitian(const ComplexMatrix& h) {
  require_hermitian(h, "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("eig_hermitian: eigensolver failed to converge");
  }
  return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix sqrt_psd(const ComplexMatrix& h) {
  const HermitianEig eig = eig_hermitian(h);
  RealVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues(i);
    if (lambda < kPsdEigenvalueFloor) {
      throw ValidationError("sqrt_psd: eigenvalue " + std::to_string(lambda) +
                            " below the PSD floor " +
                            std::to_string(kPsdEigenvalueFloor));
    }
    roots(i) = std::sqrt(std::max(lambda, 0.0));
  }
  return eig.eigenvectors * roots.asDiagonal().toDenseMatrix().cast<Complex>() *
         eig.eigenvectors.adjoint();
}

SelfAdjointPolar polar_selfadjoint(const ComplexMatrix& h) {
  const HermitianEig eig = eig_hermitian(h);
  const double scale = eig.eigenvalues.size() > 0
                           ? eig.eigenvalues.cwiseAbs().maxCoeff()
                           : 0.0;
  // Eigenvalues below this magnitude are treated as kernel directions and
  // assigned sign +1, keeping w deterministic under round-off.
  const double kernel_cut = 1e-12 * (1.0 + scale);
  RealVector signs(eig.eigenvalues.size());
  RealVector magnitudes(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues(i);
    signs(i) = (std::abs(lambda) <= kernel_cut) ? 1.0 : (lambda > 0 ? 1.0 : -1.0);
    magnitudes(i) = std::abs(lambda);
  }
  SelfAdjointPolar polar;
  polar.w = eig.eigenvectors *
            signs.asDiagonal().toDenseMatrix().cast<Complex>() *
            eig.eigenvectors.adjoint();
  polar.absval = eig.eigenvectors *
                 magnitudes.asDiagonal().toDenseMatrix().cast<Complex>() *
                 eig.eigenvectors.adjoint();
  return polar;
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  require_finite(m, "trace_norm");
  if (hermitian_check(m).passes()) {
    return eig_hermitian(m).eigenvalues.cwiseAbs().sum();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator lhs");
  require_square(b, "commutator rhs");
  if (a.rows() != b.rows()) {
    throw DimensionError("commutator: dimension mismatch " +
                         std::to_string(a.rows()) + " vs " +
                         std::to_string(b.rows()));
  }
  return a * b - b * a;
}

}  // namespace edr
