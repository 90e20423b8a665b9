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

#ifndef QDYN_STATES_HPP
#define QDYN_STATES_HPP

#include <cstdint>
#include <vector>

#include "qdyn/operators.hpp"

namespace qdyn {

/// Positive-semidefinite trace-1 matrix. Construction validates Hermiticity,
/// unit trace (within 1e-12) and positivity (within the psd tolerance), so a
/// DensityMatrix value is always a physical state.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Three-component parametrization of a qubit state, rho = (I + r.sigma)/2.
using BlochVector = Eigen::Vector3d;

/// Parameters of the isotropic two-qudit family: local dimension d >= 2 and
/// fidelity F in [0, 1] with the maximally entangled projector.
struct IsotropicParams {
  int d = 2;
  double fidelity = 0.0;
};

/// Rank-1 projector onto (1/sqrt d) sum_j |j> x |j>, as a d^2-dimensional
/// state (trace 1). Both marginals are maximally mixed.
DensityMatrix max_symmetric_projector(int d);

/// Flip (swap) operator V |psi x phi> = |phi x psi> on dimension d^2.
/// V^2 = I; spectrum has d(d+1)/2 eigenvalues +1 and d(d-1)/2 eigenvalues -1.
ComplexMatrix flip_operator(int d);

/// Isotropic state: ((1-F)/(d^2-1)) I + ((d^2 F - 1)/(d^2-1)) P_sym.
/// Spectrum is (1-F)/(d^2-1) with multiplicity d^2-1 and F with multiplicity 1.
DensityMatrix isotropic_state(const IsotropicParams& p);

/// True iff F > 1/d. Partial transposition is an exhaustive entanglement
/// witness for this family, so the threshold is exact.
bool isotropic_is_entangled(const IsotropicParams& p);

/// rho = (I + r.sigma)/2; requires |r| <= 1.
DensityMatrix bloch_to_density(const BlochVector& r);

/// Inverse of bloch_to_density; requires dim 2.
BlochVector density_to_bloch(const DensityMatrix& rho);

/// Convex mixture sum_j w_j a_j x b_j of product states. Weights must be
/// nonnegative and sum to 1 within 1e-12; factor lists must have equal
/// length and uniform dimensions.
DensityMatrix separable_mixture(const std::vector<double>& weights,
                                const std::vector<DensityMatrix>& factors_a,
                                const std::vector<DensityMatrix>& factors_b);

/// Full-rank random state G G^dag / Tr(G G^dag) with G a seeded complex
/// Gaussian matrix. Deterministic for a fixed seed.
DensityMatrix random_density(int d, std::uint64_t seed);

}  // namespace qdyn

#endif  // QDYN_STATES_HPP
