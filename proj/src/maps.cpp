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

#include "qdyn/maps.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace qdyn {

namespace {

ComplexVector vec(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index d) {
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

int superoperator_dim(const ComplexMatrix& s, const char* who) {
  if (s.rows() != s.cols()) {
    throw ShapeError(std::string(who) + ": superoperator must be square");
  }
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(
      static_cast<double>(s.rows()))));
  if (d * d != s.rows() || d < 1) {
    throw ShapeError(std::string(who) + ": superoperator dimension " +
                     std::to_string(s.rows()) + " is not a perfect square");
  }
  return static_cast<int>(d);
}

}  // namespace

QuantumMap QuantumMap::identity(int d) {
  if (d < 1) throw DomainError("QuantumMap::identity: d must be >= 1");
  return QuantumMap(
      d, ComplexMatrix::Identity(static_cast<Eigen::Index>(d) * d,
                                 static_cast<Eigen::Index>(d) * d));
}

QuantumMap QuantumMap::from_superoperator(ComplexMatrix s) {
  const int d = superoperator_dim(s, "QuantumMap::from_superoperator");
  if (!all_finite(s)) {
    throw DomainError("QuantumMap::from_superoperator: entries must be finite");
  }
  return QuantumMap(d, std::move(s));
}

QuantumMap QuantumMap::from_kraus(const KrausSet& operators) {
  if (operators.empty()) {
    throw DomainError("QuantumMap::from_kraus: at least one operator required");
  }
  const Eigen::Index d = operators.front().rows();
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (const ComplexMatrix& k : operators) {
    if (k.rows() != d || k.cols() != d) {
      throw ShapeError("QuantumMap::from_kraus: operators must be square with "
                       "uniform dimension");
    }
    // x -> K x K^dag vectorizes to (conj K x K) vec(x).
    s += kron(k.conjugate(), k);
  }
  return QuantumMap(static_cast<int>(d), std::move(s));
}

QuantumMap QuantumMap::from_choi(const ChoiMatrix& c) {
  const Eigen::Index d = c.d;
  if (d < 1 || c.matrix.rows() != d * d || c.matrix.cols() != d * d) {
    throw ShapeError("QuantumMap::from_choi: matrix must be d^2 x d^2");
  }
  // Inverse of the reshuffle in choi(): S[i + j d, k + l d] = d C[i d + k, j d + l].
  ComplexMatrix s(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index l = 0; l < d; ++l) {
          s(i + j * d, k + l * d) =
              static_cast<double>(d) * c.matrix(i * d + k, j * d + l);
        }
      }
    }
  }
  return QuantumMap(c.d, std::move(s));
}

ComplexMatrix QuantumMap::apply(const ComplexMatrix& x) const {
  if (x.rows() != d_ || x.cols() != d_) {
    throw ShapeError("QuantumMap::apply: input is " + std::to_string(x.rows()) +
                     "x" + std::to_string(x.cols()) + ", map acts on " +
                     std::to_string(d_) + "x" + std::to_string(d_));
  }
  return unvec(super_ * vec(x), d_);
}

ChoiMatrix QuantumMap::choi() const {
  const Eigen::Index d = d_;
  // C[(a d + b), (c d + e)] = S[a + c d, b + e d] / d, which is exactly
  // (Lambda x id)[P_sym] entrywise.
  ComplexMatrix c(d * d, d * d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      for (Eigen::Index cc = 0; cc < d; ++cc) {
        for (Eigen::Index e = 0; e < d; ++e) {
          c(a * d + b, cc * d + e) = super_(a + cc * d, b + e * d) /
                                     static_cast<double>(d);
        }
      }
    }
  }
  return ChoiMatrix{d_, std::move(c)};
}

KrausSet QuantumMap::kraus(double tol) const { return kraus_from_choi(choi(), tol); }

QuantumMap QuantumMap::lift(int ancilla_dim) const {
  if (ancilla_dim < 1) {
    throw DomainError("QuantumMap::lift: ancilla dimension must be >= 1");
  }
  const Eigen::Index d = d_;
  const Eigen::Index n = ancilla_dim;
  const Eigen::Index dim = d * n;
  if (dim * dim > kMaxDim) {
    throw SizeError("QuantumMap::lift: composite superoperator dimension " +
                    std::to_string(dim * dim) + " exceeds the maximum " +
                    std::to_string(kMaxDim));
  }
  // (Lambda x id)[E_{a'c'} x E_{be}] = Lambda[E_{a'c'}] x E_{be}: scatter the
  // d-level superoperator across the inert ancilla indices.
  ComplexMatrix s = ComplexMatrix::Zero(dim * dim, dim * dim);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index c = 0; c < d; ++c) {
      for (Eigen::Index ap = 0; ap < d; ++ap) {
        for (Eigen::Index cp = 0; cp < d; ++cp) {
          const Complex entry = super_(a + c * d, ap + cp * d);
          if (entry == Complex(0, 0)) continue;
          for (Eigen::Index b = 0; b < n; ++b) {
            for (Eigen::Index e = 0; e < n; ++e) {
              s((a * n + b) + (c * n + e) * dim,
                (ap * n + b) + (cp * n + e) * dim) = entry;
            }
          }
        }
      }
    }
  }
  return QuantumMap(static_cast<int>(dim), std::move(s));
}

QuantumMap QuantumMap::dual() const { return QuantumMap(d_, super_.adjoint()); }

QuantumMap QuantumMap::compose(const QuantumMap& inner) const {
  if (inner.d_ != d_) {
    throw ShapeError("QuantumMap::compose: dimension mismatch");
  }
  return QuantumMap(d_, super_ * inner.super_);
}

ComplexMatrix apply_lifted(const QuantumMap& m, const ComplexMatrix& x,
                           int ancilla_dim) {
  if (ancilla_dim < 1) {
    throw DomainError("apply_lifted: ancilla dimension must be >= 1");
  }
  const Eigen::Index d = m.dim();
  const Eigen::Index n = ancilla_dim;
  const Eigen::Index dim = d * n;
  if (x.rows() != dim || x.cols() != dim) {
    throw ShapeError("apply_lifted: input is " + std::to_string(x.rows()) +
                     "x" + std::to_string(x.cols()) + ", expected " +
                     std::to_string(dim) + "x" + std::to_string(dim));
  }
  // Write x = sum_{a,c} E_ac x B_ac and map each block through Lambda.
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  const ComplexMatrix& s = m.superoperator();
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index c = 0; c < d; ++c) {
      // Lambda[E_ac] is the unvectorized column of the superoperator.
      const ComplexMatrix image =
          Eigen::Map<const ComplexMatrix>(s.col(a + c * d).data(), d, d);
      const auto block = x.block(a * n, c * n, n, n);
      for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
          if (image(i, j) == Complex(0, 0)) continue;
          out.block(i * n, j * n, n, n) += image(i, j) * block;
        }
      }
    }
  }
  return out;
}

CpVerdict is_completely_positive(const QuantumMap& m, double tol) {
  const ChoiMatrix c = m.choi();
  const HermitianSpectrum spectrum = hermitian_eigenvalues(c.matrix);
  const double min_eig = spectrum.eigenvalues(0);
  const double eps = tol * spectrum.eigenvalues.cwiseAbs().maxCoeff();
  CpVerdict verdict;
  verdict.min_choi_eigenvalue = min_eig;
  verdict.is_cp = min_eig >= -eps;
  verdict.boundary = std::abs(min_eig) <= eps;
  if (!verdict.is_cp) {
    verdict.witness = max_symmetric_projector(m.dim());
  }
  return verdict;
}

KrausSet kraus_from_choi(const ChoiMatrix& c, double tol) {
  const Eigen::Index d = c.d;
  if (d < 1 || c.matrix.rows() != d * d || c.matrix.cols() != d * d) {
    throw ShapeError("kraus_from_choi: matrix must be d^2 x d^2");
  }
  const double defect = max_abs(c.matrix - c.matrix.adjoint());
  const double scale = max_abs(c.matrix);
  if (defect > kHermitianTol * scale) {
    throw NonHermitianError("kraus_from_choi: Choi matrix is not Hermitian",
                            defect);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      0.5 * (c.matrix + c.matrix.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw Error("kraus_from_choi: eigensolver failed to converge");
  }
  const RealVector& eigs = solver.eigenvalues();
  const double max_eig = eigs(eigs.size() - 1);
  const double magnitude = eigs.cwiseAbs().maxCoeff();
  if (eigs(0) < -tol * magnitude) {
    throw NotCpError("kraus_from_choi: Choi matrix has negative eigenvalue " +
                         std::to_string(eigs(0)) + "; no Kraus form exists",
                     eigs(0));
  }
  KrausSet operators;
  for (Eigen::Index idx = 0; idx < eigs.size(); ++idx) {
    if (eigs(idx) <= tol * max_eig) continue;  // below numerical rank
    const double weight = std::sqrt(static_cast<double>(d) * eigs(idx));
    const ComplexVector& v = solver.eigenvectors().col(idx);
    // The Choi eigenvector at flat index a*d + b holds K(a, b) / sqrt(d).
    ComplexMatrix k(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        k(a, b) = weight * v(a * d + b);
      }
    }
    operators.push_back(std::move(k));
  }
  return operators;
}

QuantumMap transposition_map(int d) {
  if (d < 1) throw DomainError("transposition_map: d must be >= 1");
  const Eigen::Index dd = d;
  ComplexMatrix s = ComplexMatrix::Zero(dd * dd, dd * dd);
  for (Eigen::Index i = 0; i < dd; ++i) {
    for (Eigen::Index j = 0; j < dd; ++j) {
      s(i + j * dd, j + i * dd) = 1.0;
    }
  }
  return QuantumMap::from_superoperator(std::move(s));
}

QuantumMap trace_map(int d) {
  if (d < 1) throw DomainError("trace_map: d must be >= 1");
  const Eigen::Index dd = d;
  const ComplexVector id_vec =
      vec(ComplexMatrix::Identity(dd, dd));
  ComplexMatrix s = (id_vec * id_vec.transpose()) / static_cast<double>(d);
  return QuantumMap::from_superoperator(std::move(s));
}

QuantumMap pcp_family_map(int d, double mu) {
  if (d < 2) throw DomainError("pcp_family_map: d must be >= 2");
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError("pcp_family_map: mu must lie in [0, 1], got " +
                      std::to_string(mu));
  }
  ComplexMatrix s = mu * trace_map(d).superoperator() +
                    (1.0 - mu) * transposition_map(d).superoperator();
  return QuantumMap::from_superoperator(std::move(s));
}

QuantumMap unitary_channel(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw ShapeError("unitary_channel: matrix must be square");
  }
  const double defect = max_abs(
      u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
  if (defect > 1e-10) {
    throw DomainError("unitary_channel: matrix is not unitary, defect " +
                      std::to_string(defect));
  }
  return QuantumMap::from_superoperator(kron(u.conjugate(), u));
}

bool is_trace_preserving(const QuantumMap& m, double tol) {
  const Eigen::Index d = m.dim();
  const ComplexVector id_vec = vec(ComplexMatrix::Identity(d, d));
  // Tr(Lambda[x]) = Tr(x) for every x iff S^dag maps vec(I) to itself.
  return max_abs(m.superoperator().adjoint() * id_vec - id_vec) <= tol;
}

bool is_unital(const QuantumMap& m, double tol) {
  const Eigen::Index d = m.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return max_abs(m.apply(id) - id) <= tol;
}

PositivityProbe positivity_probe(const QuantumMap& m, int samples,
                                 std::uint64_t seed) {
  if (samples < 1) {
    throw DomainError("positivity_probe: samples must be >= 1");
  }
  constexpr int kRefineSteps = 25;
  constexpr double kStep = 0.25;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Eigen::Index d = m.dim();
  const QuantumMap dual_map = m.dual();

  PositivityProbe probe;
  probe.min_eigenvalue = std::numeric_limits<double>::infinity();

  for (int s = 0; s < samples; ++s) {
    ComplexVector psi(d);
    for (Eigen::Index i = 0; i < d; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    psi.normalize();

    for (int step = 0; step <= kRefineSteps; ++step) {
      const ComplexMatrix rho = psi * psi.adjoint();
      const ComplexMatrix image = m.apply(rho);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
          0.5 * (image + image.adjoint()));
      const double min_eig = solver.eigenvalues()(0);
      probe.min_eigenvalue = std::min(probe.min_eigenvalue, min_eig);
      const double eps =
          kPsdTolFactor * solver.eigenvalues().cwiseAbs().maxCoeff();
      if (min_eig < -eps) {
        probe.certified_not_positive = true;
        probe.witness = DensityMatrix(rho);
        return probe;
      }
      if (step == kRefineSteps) break;
      // Descend along the dual image of the minimal eigenprojector, which is
      // the gradient of psi -> <v| Lambda[psi psi^dag] |v> for fixed v.
      const ComplexVector v = solver.eigenvectors().col(0);
      const ComplexMatrix gradient = dual_map.apply(v * v.adjoint());
      psi -= kStep * (gradient * psi);
      const double norm = psi.norm();
      if (norm < 1e-12) break;  // degenerate direction, resample
      psi /= norm;
    }
  }
  return probe;
}

}  // namespace qdyn
