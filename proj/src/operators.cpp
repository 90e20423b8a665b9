// Copyright 2026 The qdyn authors
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

#include "qdyn/operators.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace qdyn {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw ShapeError(std::string(who) + ": matrix is " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected square");
  }
}

void require_bipartite(const ComplexMatrix& m, int dim_a, int dim_b,
                       const char* who) {
  require_square(m, who);
  if (dim_a < 1 || dim_b < 1) {
    throw ShapeError(std::string(who) + ": factor dimensions must be >= 1");
  }
  if (m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw ShapeError(std::string(who) + ": matrix dimension " +
                     std::to_string(m.rows()) + " != " + std::to_string(dim_a) +
                     " * " + std::to_string(dim_b));
  }
}

// Threshold below which a matrix counts as exactly (anti-)Hermitian for the
// purpose of routing matrix_exp through the spectral path.
constexpr double kNormalDetectTol = 1e-13;

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity_defect");
  return max_abs(m - m.adjoint());
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (a.rows() > 0 && b.rows() > 0 &&
      (rows > kMaxDim || cols > kMaxDim)) {
    throw SizeError("kron: requested dimension " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " exceeds the maximum " +
                    std::to_string(kMaxDim));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  require_square(m, "hermitian_eigenvalues");
  const double defect = max_abs(m - m.adjoint());
  const double scale = max_abs(m);
  if (defect > tol * scale) {
    throw NonHermitianError(
        "hermitian_eigenvalues: Hermiticity defect " + std::to_string(defect) +
            " exceeds " + std::to_string(tol) + " * " + std::to_string(scale),
        defect);
  }
  // Symmetrize so the solver sees an exactly Hermitian matrix.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigenvalues: eigensolver failed to converge");
  }
  return HermitianSpectrum{solver.eigenvalues(), defect};
}

double min_hermitian_eigenvalue(const ComplexMatrix& m, double tol) {
  return hermitian_eigenvalues(m, tol).eigenvalues(0);
}

double psd_tolerance(const RealVector& eigenvalues) {
  if (eigenvalues.size() == 0) return 0.0;
  return kPsdTolFactor * eigenvalues.cwiseAbs().maxCoeff();
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  require_square(m, "matrix_exp");
  const Eigen::Index n = m.rows();
  const double scale = max_abs(m);
  if (scale == 0.0) {
    return ComplexMatrix::Identity(n, n);
  }
  if (max_abs(m - m.adjoint()) <= kNormalDetectTol * scale) {
    // Hermitian: exp(M) = Q exp(diag) Q^dag.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 *
                                                        (m + m.adjoint()));
    const RealVector& ev = solver.eigenvalues();
    ComplexVector phases(n);
    for (Eigen::Index i = 0; i < n; ++i) phases(i) = std::exp(ev(i));
    return solver.eigenvectors() * phases.asDiagonal() *
           solver.eigenvectors().adjoint();
  }
  if (max_abs(m + m.adjoint()) <= kNormalDetectTol * scale) {
    // Anti-Hermitian: M = iK with K Hermitian, exp(M) = Q exp(i diag) Q^dag.
    const ComplexMatrix k = Complex(0, -0.5) * (m - m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(k);
    const RealVector& ev = solver.eigenvalues();
    ComplexVector phases(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      phases(i) = std::exp(Complex(0, ev(i)));
    }
    return solver.eigenvectors() * phases.asDiagonal() *
           solver.eigenvectors().adjoint();
  }
  return m.exp();
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b,
                                Subsystem target) {
  require_bipartite(m, dim_a, dim_b, "partial_transpose");
  ComplexMatrix out(m.rows(), m.cols());
  for (int a = 0; a < dim_a; ++a) {
    for (int c = 0; c < dim_a; ++c) {
      for (int b = 0; b < dim_b; ++b) {
        for (int e = 0; e < dim_b; ++e) {
          const Eigen::Index row = static_cast<Eigen::Index>(a) * dim_b + b;
          const Eigen::Index col = static_cast<Eigen::Index>(c) * dim_b + e;
          out(row, col) = target == Subsystem::A
                              ? m(static_cast<Eigen::Index>(c) * dim_b + b,
                                  static_cast<Eigen::Index>(a) * dim_b + e)
                              : m(static_cast<Eigen::Index>(a) * dim_b + e,
                                  static_cast<Eigen::Index>(c) * dim_b + b);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem keep) {
  require_bipartite(m, dim_a, dim_b, "partial_trace");
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int a = 0; a < dim_a; ++a) {
      for (int c = 0; c < dim_a; ++c) {
        for (int b = 0; b < dim_b; ++b) {
          out(a, c) += m(static_cast<Eigen::Index>(a) * dim_b + b,
                         static_cast<Eigen::Index>(c) * dim_b + b);
        }
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int b = 0; b < dim_b; ++b) {
    for (int e = 0; e < dim_b; ++e) {
      for (int a = 0; a < dim_a; ++a) {
        out(b, e) += m(static_cast<Eigen::Index>(a) * dim_b + b,
                       static_cast<Eigen::Index>(a) * dim_b + e);
      }
    }
  }
  return out;
}

ComplexMatrix pauli(int k) {
  ComplexMatrix s(2, 2);
  switch (k) {
    case 1:
      s << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
      break;
    case 2:
      s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case 3:
      s << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
      break;
    default:
      throw DomainError("pauli: index must be 1, 2 or 3");
  }
  return s;
}

}  // namespace qdyn
