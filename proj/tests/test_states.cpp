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

#include <cmath>
#include <random>

#include <doctest.h>

#include "qdyn/states.hpp"
#include "test_support.hpp"

using namespace qdyn;

TEST_CASE("max_symmetric_projector: d=2 entries expanded by hand") {
  const ComplexMatrix p = max_symmetric_projector(2).matrix();
  // |Psi> = (|00> + |11>)/sqrt(2): support on flat indices 0 and 3.
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const double expected =
          ((i == 0 || i == 3) && (j == 0 || j == 3)) ? 0.5 : 0.0;
      CHECK(std::abs(p(i, j) - Complex(expected, 0)) == 0.0);
    }
  }
}

TEST_CASE("max_symmetric_projector: projector identities and marginals") {
  for (int d = 2; d <= 5; ++d) {
    const ComplexMatrix p = max_symmetric_projector(d).matrix();
    CHECK(std::abs(p.trace() - Complex(1, 0)) < 1e-14);
    CHECK(max_abs(p * p - p) < 1e-14);
    const ComplexMatrix uniform =
        ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    CHECK(max_abs(partial_trace(p, d, d, Subsystem::A) - uniform) < 1e-14);
    CHECK(max_abs(partial_trace(p, d, d, Subsystem::B) - uniform) < 1e-14);
    // Flip symmetrization: V P = P.
    CHECK(max_abs(flip_operator(d) * p - p) < 1e-14);
  }
  CHECK_THROWS_AS(max_symmetric_projector(1), DomainError);
}

TEST_CASE("flip_operator: involution and exact eigenvalue multiplicities") {
  for (int d = 2; d <= 5; ++d) {
    const ComplexMatrix v = flip_operator(d);
    CHECK(max_abs(v * v - ComplexMatrix::Identity(d * d, d * d)) == 0.0);
    const RealVector eigs = hermitian_eigenvalues(v).eigenvalues;
    int minus = 0, plus = 0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
      if (std::abs(eigs(i) + 1.0) < 1e-12) ++minus;
      if (std::abs(eigs(i) - 1.0) < 1e-12) ++plus;
    }
    CHECK(minus == d * (d - 1) / 2);
    CHECK(plus == d * (d + 1) / 2);
  }
  CHECK_THROWS_AS(flip_operator(0), DomainError);
}

TEST_CASE("flip_operator: connection to the partial transpose") {
  for (int d = 2; d <= 4; ++d) {
    const ComplexMatrix p = max_symmetric_projector(d).matrix();
    const ComplexMatrix pt = partial_transpose(p, d, d, Subsystem::A);
    CHECK(max_abs(pt - flip_operator(d) / static_cast<double>(d)) < 1e-15);
    CHECK(min_hermitian_eigenvalue(pt) ==
          doctest::Approx(-1.0 / d).epsilon(1e-12));
  }
}

TEST_CASE("isotropic_state: endpoint and interior spectra") {
  // F = 1/d^2 collapses onto the maximally mixed state.
  const ComplexMatrix mixed = isotropic_state({2, 0.25}).matrix();
  CHECK(max_abs(mixed - ComplexMatrix::Identity(4, 4) / 4.0) < 1e-15);

  // F = 1 is the projector itself.
  const ComplexMatrix pure = isotropic_state({3, 1.0}).matrix();
  CHECK(max_abs(pure - max_symmetric_projector(3).matrix()) < 1e-15);

  const RealVector eigs =
      hermitian_eigenvalues(isotropic_state({2, 0.7}).matrix()).eigenvalues;
  CHECK(eigs(0) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(eigs(1) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(eigs(2) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(eigs(3) == doctest::Approx(0.7).epsilon(1e-12));

  CHECK_THROWS_AS(isotropic_state({2, 1.2}), DomainError);
  CHECK_THROWS_AS(isotropic_state({2, -0.1}), DomainError);
}

TEST_CASE("isotropic_state: spectrum matches the two-level closed form") {
  for (int d = 2; d <= 8; ++d) {
    for (int i = 0; i < 50; ++i) {
      const double f = static_cast<double>(i) / 49.0;
      const RealVector eigs =
          hermitian_eigenvalues(isotropic_state({d, f}).matrix()).eigenvalues;
      const double bulk = (1.0 - f) / (d * d - 1.0);
      // d^2 - 1 eigenvalues at the bulk value, one at F (sorted ascending).
      int bulk_count = 0, top_count = 0;
      for (Eigen::Index k = 0; k < eigs.size(); ++k) {
        if (std::abs(eigs(k) - bulk) <= 1e-12) ++bulk_count;
        if (std::abs(eigs(k) - f) <= 1e-12) ++top_count;
      }
      CHECK(bulk_count >= d * d - 1);
      CHECK(top_count >= 1);
    }
  }
}

TEST_CASE("isotropic_is_entangled: threshold 1/d, boundary separable") {
  CHECK_FALSE(isotropic_is_entangled({2, 0.4}));
  CHECK(isotropic_is_entangled({2, 0.6}));
  CHECK_FALSE(isotropic_is_entangled({3, 1.0 / 3.0}));
}

TEST_CASE("isotropic_is_entangled: agrees with the partial-transpose witness") {
  for (int d = 2; d <= 8; ++d) {
    for (int i = 0; i < 50; ++i) {
      const double f = static_cast<double>(i) / 49.0;
      const ComplexMatrix rho = isotropic_state({d, f}).matrix();
      const HermitianSpectrum spectrum =
          hermitian_eigenvalues(partial_transpose(rho, d, d, Subsystem::A));
      const bool npt =
          spectrum.eigenvalues(0) < -psd_tolerance(spectrum.eigenvalues);
      CHECK(npt == isotropic_is_entangled({d, f}));
    }
  }
}

TEST_CASE("bloch: poles, center and spectra") {
  CHECK(max_abs(bloch_to_density(BlochVector::Zero()).matrix() -
                0.5 * ComplexMatrix::Identity(2, 2)) == 0.0);

  const ComplexMatrix north = bloch_to_density({0, 0, 1}).matrix();
  CHECK(std::abs(north(0, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(north(1, 1)) < 1e-15);

  CHECK_THROWS_AS(bloch_to_density({0.8, 0.8, 0.8}), DomainError);
}

TEST_CASE("bloch: round-trip on random vectors in the ball") {
  auto rng = test::make_rng(61);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int accepted = 0;
  while (accepted < 100) {
    const BlochVector r(unit(rng), unit(rng), unit(rng));
    if (r.norm() > 1.0) continue;
    ++accepted;
    const DensityMatrix rho = bloch_to_density(r);
    CHECK((density_to_bloch(rho) - r).cwiseAbs().maxCoeff() < 1e-12);
    // Eigenvalues are (1 +- |r|)/2.
    const RealVector eigs = hermitian_eigenvalues(rho.matrix()).eigenvalues;
    CHECK(eigs(0) == doctest::Approx((1 - r.norm()) / 2).epsilon(1e-12));
    CHECK(eigs(1) == doctest::Approx((1 + r.norm()) / 2).epsilon(1e-12));
  }
  CHECK_THROWS_AS(density_to_bloch(random_density(3, 5)), ShapeError);
}

TEST_CASE("separable_mixture: product case and hand-expanded mix") {
  const DensityMatrix rho = random_density(2, 7);
  const DensityMatrix sigma = random_density(3, 8);
  const DensityMatrix product = separable_mixture({1.0}, {rho}, {sigma});
  CHECK(max_abs(product.matrix() - kron(rho.matrix(), sigma.matrix())) <
        1e-14);

  const DensityMatrix zero(bloch_to_density({0, 0, 1}));
  const DensityMatrix one(bloch_to_density({0, 0, -1}));
  const DensityMatrix mix =
      separable_mixture({0.5, 0.5}, {zero, one}, {zero, one});
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK(max_abs(mix.matrix() - expected) < 1e-15);
}

TEST_CASE("separable_mixture: outputs stay positive under partial transpose") {
  auto rng = test::make_rng(62);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    double w0 = unit(rng), w1 = unit(rng), w2 = unit(rng);
    const double total = w0 + w1 + w2;
    std::vector<double> weights{w0 / total, w1 / total, w2 / total};
    std::vector<DensityMatrix> a, b;
    for (int j = 0; j < 3; ++j) {
      a.push_back(random_density(2, 100 * trial + j));
      b.push_back(random_density(2, 200 * trial + j));
    }
    const DensityMatrix mix = separable_mixture(weights, a, b);
    const HermitianSpectrum spectrum = hermitian_eigenvalues(
        partial_transpose(mix.matrix(), 2, 2, Subsystem::A));
    CHECK(spectrum.eigenvalues(0) >= -psd_tolerance(spectrum.eigenvalues));
  }
}

TEST_CASE("separable_mixture: weight validation") {
  const DensityMatrix rho = random_density(2, 9);
  CHECK_THROWS_AS(separable_mixture({0.5, 0.6}, {rho, rho}, {rho, rho}),
                  DomainError);
  CHECK_THROWS_AS(separable_mixture({-0.5, 1.5}, {rho, rho}, {rho, rho}),
                  DomainError);
  CHECK_THROWS_AS(separable_mixture({}, {}, {}), DomainError);
}

TEST_CASE("random_density: determinism and validity") {
  const DensityMatrix first = random_density(3, 42);
  const DensityMatrix second = random_density(3, 42);
  CHECK(max_abs(first.matrix() - second.matrix()) == 0.0);
  CHECK(max_abs(first.matrix() - random_density(3, 43).matrix()) > 1e-3);

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const DensityMatrix rho = random_density(3, seed);
    CHECK(std::abs(rho.matrix().trace() - Complex(1, 0)) < 1e-12);
    const HermitianSpectrum spectrum = hermitian_eigenvalues(rho.matrix());
    CHECK(spectrum.eigenvalues(0) >= -psd_tolerance(spectrum.eigenvalues));
  }
}

TEST_CASE("DensityMatrix: constructor rejects invalid inputs") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::Identity(2, 2)), DomainError);
  ComplexMatrix not_herm(2, 2);
  not_herm << Complex(0.5, 0), Complex(0.3, 0), Complex(-0.3, 0),
      Complex(0.5, 0);
  CHECK_THROWS_AS(DensityMatrix{not_herm}, NonHermitianError);
  ComplexMatrix negative(2, 2);
  negative << Complex(1.5, 0), Complex(0, 0), Complex(0, 0), Complex(-0.5, 0);
  CHECK_THROWS_AS(DensityMatrix{negative}, DomainError);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::Zero(2, 3)), ShapeError);
}
