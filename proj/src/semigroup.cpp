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

#include "qdyn/semigroup.hpp"

#include <cmath>
#include <string>

namespace qdyn {

namespace {

constexpr double kBasisTol = 1e-10;

ComplexMatrix matrix_unit(int d, int j, int k) {
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  e(j, k) = 1.0;
  return e;
}

}  // namespace

std::vector<ComplexMatrix> gell_mann_basis(int d) {
  if (d < 2) throw DomainError("gell_mann_basis: d must be >= 2");
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d) * d - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      basis.push_back(inv_sqrt2 * (matrix_unit(d, j, k) + matrix_unit(d, k, j)));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      basis.push_back(Complex(0, -1) * inv_sqrt2 *
                      (matrix_unit(d, j, k) - matrix_unit(d, k, j)));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int k = 0; k < l; ++k) diag(k, k) = norm;
    diag(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(std::move(diag));
  }
  return basis;
}

GklsGenerator GklsGenerator::with_gell_mann(ComplexMatrix h, ComplexMatrix c) {
  GklsGenerator g;
  g.d = static_cast<int>(h.rows());
  g.hamiltonian = std::move(h);
  g.kossakowski = std::move(c);
  g.basis = gell_mann_basis(g.d);
  validate(g);
  return g;
}

void validate(const GklsGenerator& g) {
  if (g.d < 2) throw DomainError("GklsGenerator: d must be >= 2");
  const Eigen::Index d = g.d;
  const Eigen::Index m = d * d - 1;
  if (g.hamiltonian.rows() != d || g.hamiltonian.cols() != d) {
    throw ShapeError("GklsGenerator: Hamiltonian must be d x d");
  }
  if (g.kossakowski.rows() != m || g.kossakowski.cols() != m) {
    throw ShapeError("GklsGenerator: coefficient matrix must be "
                     "(d^2-1) x (d^2-1)");
  }
  double defect = hermiticity_defect(g.hamiltonian);
  if (defect > kHermitianTol * std::max(1.0, max_abs(g.hamiltonian))) {
    throw NonHermitianError("GklsGenerator: Hamiltonian is not Hermitian",
                            defect);
  }
  defect = hermiticity_defect(g.kossakowski);
  if (defect > kHermitianTol * std::max(1.0, max_abs(g.kossakowski))) {
    throw NonHermitianError(
        "GklsGenerator: coefficient matrix is not Hermitian", defect);
  }
  if (static_cast<Eigen::Index>(g.basis.size()) != m) {
    throw ShapeError("GklsGenerator: basis must contain d^2-1 matrices");
  }
  for (std::size_t a = 0; a < g.basis.size(); ++a) {
    if (g.basis[a].rows() != d || g.basis[a].cols() != d) {
      throw ShapeError("GklsGenerator: basis matrices must be d x d");
    }
    if (std::abs(g.basis[a].trace()) > kBasisTol) {
      throw DomainError("GklsGenerator: basis matrix " + std::to_string(a) +
                        " is not traceless");
    }
    for (std::size_t b = a; b < g.basis.size(); ++b) {
      const Complex overlap = (g.basis[a].adjoint() * g.basis[b]).trace();
      const double expected = a == b ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > kBasisTol) {
        throw DomainError("GklsGenerator: basis is not orthonormal at pair (" +
                          std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
}

ComplexMatrix gkls_superoperator(const GklsGenerator& g) {
  validate(g);
  const Eigen::Index d = g.d;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const Complex i(0, 1);
  // Hamiltonian part of -i[H, rho] under column vectorization.
  ComplexMatrix s = -i * (kron(id, g.hamiltonian) -
                          kron(g.hamiltonian.transpose(), id));
  const std::size_t m = g.basis.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Complex c = g.kossakowski(a, b);
      if (c == Complex(0, 0)) continue;
      const ComplexMatrix g_ab = g.basis[a].adjoint() * g.basis[b];
      s += c * (kron(g.basis[a].conjugate(), g.basis[b]) -
                0.5 * kron(id, g_ab) - 0.5 * kron(g_ab.transpose(), id));
    }
  }
  return s;
}

ComplexMatrix gkls_superoperator_heisenberg(const GklsGenerator& g) {
  validate(g);
  const Eigen::Index d = g.d;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const Complex i(0, 1);
  ComplexMatrix s = i * (kron(id, g.hamiltonian) -
                         kron(g.hamiltonian.transpose(), id));
  const std::size_t m = g.basis.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Complex c = g.kossakowski(a, b);
      if (c == Complex(0, 0)) continue;
      const ComplexMatrix g_ab = g.basis[a].adjoint() * g.basis[b];
      s += c * (kron(g.basis[b].transpose(), g.basis[a].adjoint()) -
                0.5 * kron(id, g_ab) - 0.5 * kron(g_ab.transpose(), id));
    }
  }
  return s;
}

QuantumMap evolve_map(const GklsGenerator& g, double t) {
  if (!(t >= 0.0)) {
    throw DomainError("evolve_map: the semigroup is forward-only, t must be "
                      ">= 0, got " + std::to_string(t));
  }
  return QuantumMap::from_superoperator(matrix_exp(t * gkls_superoperator(g)));
}

bool kossakowski_is_psd(const GklsGenerator& g, double tol) {
  validate(g);
  return min_hermitian_eigenvalue(g.kossakowski) >= -tol;
}

GklsGenerator qubit_pauli_generator(const QubitPauliParams& p) {
  ComplexMatrix c = ComplexMatrix::Zero(3, 3);
  c(0, 0) = 1.0;
  c(1, 1) = 1.0;
  c(2, 2) = p.anisotropy;
  return GklsGenerator::with_gell_mann(ComplexMatrix::Zero(2, 2),
                                       std::move(c));
}

BlochVector qubit_bloch_solution(const QubitPauliParams& p,
                                 const BlochVector& r0, double t) {
  if (r0.norm() > 1.0 + 1e-12) {
    throw DomainError("qubit_bloch_solution: |r0| exceeds 1");
  }
  if (!(t >= 0.0)) {
    throw DomainError("qubit_bloch_solution: t must be >= 0");
  }
  const double transverse = std::exp(-(1.0 + p.anisotropy) * t);
  return BlochVector(transverse * r0(0), transverse * r0(1),
                     std::exp(-2.0 * t) * r0(2));
}

const char* to_string(SemigroupClass c) {
  switch (c) {
    case SemigroupClass::Cp:
      return "CP";
    case SemigroupClass::PositiveNotCp:
      return "positive_not_CP";
    case SemigroupClass::NotPositive:
      return "not_positive";
  }
  return "unknown";
}

SemigroupClass qubit_classification(const QubitPauliParams& p) {
  if (p.anisotropy >= 0.0) return SemigroupClass::Cp;
  if (p.anisotropy >= -1.0) return SemigroupClass::PositiveNotCp;
  return SemigroupClass::NotPositive;
}

}  // namespace qdyn
