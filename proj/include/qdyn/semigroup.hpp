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

#ifndef QDYN_SEMIGROUP_HPP
#define QDYN_SEMIGROUP_HPP

#include <vector>

#include "qdyn/maps.hpp"
#include "qdyn/operators.hpp"
#include "qdyn/states.hpp"

namespace qdyn {

/// Generalized Gell-Mann basis of traceless matrices with
/// Tr(F_a^dag F_b) = delta_ab: the d(d-1)/2 symmetric pairs (j < k,
/// lexicographic), then the d(d-1)/2 antisymmetric pairs, then the d-1
/// diagonal matrices. For d = 2 this is (sigma_1, sigma_2, sigma_3)/sqrt(2).
std::vector<ComplexMatrix> gell_mann_basis(int d);

/// Generator data for a quantum dynamical semigroup: Hamiltonian H, the
/// (d^2-1) x (d^2-1) matrix of dissipative coefficients C, and the traceless
/// orthonormal operator basis the coefficients refer to.
struct GklsGenerator {
  int d = 0;
  ComplexMatrix hamiltonian;   // d x d, Hermitian
  ComplexMatrix kossakowski;   // (d^2-1) x (d^2-1), Hermitian
  std::vector<ComplexMatrix> basis;

  /// Convenience factory with the Gell-Mann basis; d is inferred from h.
  static GklsGenerator with_gell_mann(ComplexMatrix h, ComplexMatrix c);
};

/// Throws if shapes, Hermiticity or basis orthonormality are violated.
void validate(const GklsGenerator& g);

/// Superoperator of the generator in the state (Schroedinger) picture:
/// rho -> -i[H, rho] + sum_ab C_ab (F_b rho F_a^dag - {F_a^dag F_b, rho}/2).
/// Annihilates the trace of every input.
ComplexMatrix gkls_superoperator(const GklsGenerator& g);

/// The dual generator acting on observables (Heisenberg picture):
/// x -> i[H, x] + sum_ab C_ab (F_a^dag x F_b - {F_a^dag F_b, x}/2).
ComplexMatrix gkls_superoperator_heisenberg(const GklsGenerator& g);

/// The dynamical map exp(t L) in the state picture; t must be >= 0.
QuantumMap evolve_map(const GklsGenerator& g, double t);

/// True iff the coefficient matrix C has min eigenvalue >= -tol. Equivalent
/// to complete positivity of the generated semigroup.
bool kossakowski_is_psd(const GklsGenerator& g, double tol = 1e-10);

/// The purely dissipative qubit family: H = 0, basis sigma_k/sqrt(2),
/// C = diag(1, 1, a). The semigroup is positive iff a >= -1 and completely
/// positive iff a >= 0.
struct QubitPauliParams {
  double anisotropy = 0.0;  // the coefficient a on the sigma_3 channel
};

GklsGenerator qubit_pauli_generator(const QubitPauliParams& p);

/// Closed-form Bloch trajectory of the qubit family:
/// (exp(-(1+a)t) r1, exp(-(1+a)t) r2, exp(-2t) r3).
BlochVector qubit_bloch_solution(const QubitPauliParams& p,
                                 const BlochVector& r0, double t);

enum class SemigroupClass { Cp, PositiveNotCp, NotPositive };

const char* to_string(SemigroupClass c);

/// Classification by the anisotropy thresholds: CP for a >= 0, positive but
/// not CP for -1 <= a < 0 (boundary a = -1 included), not positive below.
SemigroupClass qubit_classification(const QubitPauliParams& p);

}  // namespace qdyn

#endif  // QDYN_SEMIGROUP_HPP
