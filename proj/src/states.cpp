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

#include "qdyn/states.hpp"

#include <cmath>
#include <random>
#include <string>

namespace qdyn {

namespace {

constexpr double kTraceTol = 1e-12;

void validate_isotropic(const IsotropicParams& p) {
  if (p.d < 2) {
    throw DomainError("isotropic: d must be >= 2, got " + std::to_string(p.d));
  }
  if (!(p.fidelity >= 0.0 && p.fidelity <= 1.0)) {
    throw DomainError("isotropic: fidelity must lie in [0, 1], got " +
                      std::to_string(p.fidelity));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw ShapeError("DensityMatrix: matrix must be square and nonempty");
  }
  if (!all_finite(matrix_)) {
    throw DomainError("DensityMatrix: entries must be finite");
  }
  const double trace_defect = std::abs(matrix_.trace() - Complex(1, 0));
  if (trace_defect > kTraceTol) {
    throw DomainError("DensityMatrix: trace deviates from 1 by " +
                      std::to_string(trace_defect));
  }
  // Throws NonHermitianError beyond tolerance.
  const HermitianSpectrum spectrum = hermitian_eigenvalues(matrix_);
  const double eps = psd_tolerance(spectrum.eigenvalues);
  if (spectrum.eigenvalues(0) < -eps) {
    throw DomainError("DensityMatrix: negative eigenvalue " +
                      std::to_string(spectrum.eigenvalues(0)));
  }
}

DensityMatrix max_symmetric_projector(int d) {
  if (d < 2) {
    throw DomainError("max_symmetric_projector: d must be >= 2");
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
  if (dim > kMaxDim) {
    throw SizeError("max_symmetric_projector: d^2 exceeds the maximum");
  }
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  const double inv_d = 1.0 / d;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      p(static_cast<Eigen::Index>(j) * d + j,
        static_cast<Eigen::Index>(k) * d + k) = inv_d;
    }
  }
  return DensityMatrix(std::move(p));
}

ComplexMatrix flip_operator(int d) {
  if (d < 2) {
    throw DomainError("flip_operator: d must be >= 2");
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
  if (dim > kMaxDim) {
    throw SizeError("flip_operator: d^2 exceeds the maximum");
  }
  ComplexMatrix v = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      // |k><j| x |j><k|
      v(static_cast<Eigen::Index>(k) * d + j,
        static_cast<Eigen::Index>(j) * d + k) = 1.0;
    }
  }
  return v;
}

DensityMatrix isotropic_state(const IsotropicParams& p) {
  validate_isotropic(p);
  const double d2 = static_cast<double>(p.d) * p.d;
  const double uniform = (1.0 - p.fidelity) / (d2 - 1.0);
  const double projector = (d2 * p.fidelity - 1.0) / (d2 - 1.0);
  const ComplexMatrix psym = max_symmetric_projector(p.d).matrix();
  ComplexMatrix rho =
      uniform * ComplexMatrix::Identity(psym.rows(), psym.cols()) +
      projector * psym;
  return DensityMatrix(std::move(rho));
}

bool isotropic_is_entangled(const IsotropicParams& p) {
  validate_isotropic(p);
  return p.fidelity > 1.0 / p.d;
}

DensityMatrix bloch_to_density(const BlochVector& r) {
  if (r.norm() > 1.0 + 1e-12) {
    throw DomainError("bloch_to_density: |r| = " + std::to_string(r.norm()) +
                      " exceeds 1");
  }
  ComplexMatrix rho = 0.5 * ComplexMatrix::Identity(2, 2);
  for (int k = 1; k <= 3; ++k) {
    rho += 0.5 * r(k - 1) * pauli(k);
  }
  return DensityMatrix(std::move(rho));
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw ShapeError("density_to_bloch: state must be a qubit");
  }
  BlochVector r;
  for (int k = 1; k <= 3; ++k) {
    r(k - 1) = (rho.matrix() * pauli(k)).trace().real();
  }
  return r;
}

DensityMatrix separable_mixture(const std::vector<double>& weights,
                                const std::vector<DensityMatrix>& factors_a,
                                const std::vector<DensityMatrix>& factors_b) {
  if (weights.empty() || weights.size() != factors_a.size() ||
      weights.size() != factors_b.size()) {
    throw DomainError("separable_mixture: weights and factor lists must have "
                      "the same nonzero length");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw DomainError("separable_mixture: weights must be nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("separable_mixture: weights sum to " +
                      std::to_string(sum) + ", expected 1");
  }
  const int da = factors_a.front().dim();
  const int db = factors_b.front().dim();
  ComplexMatrix mix = ComplexMatrix::Zero(static_cast<Eigen::Index>(da) * db,
                                          static_cast<Eigen::Index>(da) * db);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (factors_a[j].dim() != da || factors_b[j].dim() != db) {
      throw ShapeError("separable_mixture: factor dimensions must be uniform");
    }
    mix += weights[j] * kron(factors_a[j].matrix(), factors_b[j].matrix());
  }
  return DensityMatrix(std::move(mix));
}

DensityMatrix random_density(int d, std::uint64_t seed) {
  if (d < 1) {
    throw DomainError("random_density: d must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(std::move(rho));
}

}  // namespace qdyn
