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

#ifndef QDYN_OPERATORS_HPP
#define QDYN_OPERATORS_HPP

#include <complex>

#include <Eigen/Dense>

#include "qdyn/errors.hpp"

namespace qdyn {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Hard cap on any matrix dimension produced by tensor operations.
inline constexpr Eigen::Index kMaxDim = 8192;

/// Default relative tolerance for accepting a constructed matrix as
/// Hermitian.
inline constexpr double kHermitianTol = 1e-9;

/// Relative factor for the negativity tolerance when classifying a spectrum
/// as positive semidefinite: eps = kPsdTolFactor * max |eigenvalue|.
inline constexpr double kPsdTolFactor = 1e-10;

/// Tensor factor of a bipartite composite. The composite index convention is
/// fixed project-wide as i = i_A * dim_B + i_B (factor A is the major index).
enum class Subsystem { A, B };

/// Eigenvalues of a Hermitian matrix, plus the measured Hermiticity defect
/// of the input it was computed from.
struct HermitianSpectrum {
  RealVector eigenvalues;     // sorted ascending
  double hermiticity_defect;  // max entry of |M - M^dag|
};

/// Largest entry magnitude, zero for empty matrices.
double max_abs(const ComplexMatrix& m);

/// max_ij |M - M^dag|_ij; throws ShapeError for non-square input.
double hermiticity_defect(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

/// Kronecker product with composite index (i_A * dim_B + i_B).
/// Throws SizeError if a resulting dimension exceeds kMaxDim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Spectrum of a Hermitian matrix via a dedicated self-adjoint solver.
/// The input must be Hermitian up to defect <= tol * max_abs(m), otherwise
/// a NonHermitianError carrying the defect is thrown.
HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m,
                                        double tol = kHermitianTol);

/// Smallest eigenvalue of a Hermitian matrix.
double min_hermitian_eigenvalue(const ComplexMatrix& m,
                                double tol = kHermitianTol);

/// Negativity tolerance derived from a spectrum: kPsdTolFactor * max |eig|.
double psd_tolerance(const RealVector& eigenvalues);

/// Matrix exponential. Hermitian and anti-Hermitian inputs go through a
/// spectral decomposition; everything else through scaling-and-squaring
/// with a Pade approximant.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// Transposition applied to one tensor factor of a (dim_a * dim_b)-dimensional
/// composite. Applying it twice restores the input.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b,
                                Subsystem target);

/// Trace out one tensor factor, keeping the other. Preserves the full trace.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem keep);

/// Pauli matrix sigma_k for k in {1, 2, 3}.
ComplexMatrix pauli(int k);

}  // namespace qdyn

#endif  // QDYN_OPERATORS_HPP
