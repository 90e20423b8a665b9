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

#include <doctest.h>

#include "qdyn/compat.hpp"
#include "test_support.hpp"

using namespace qdyn;

TEST_CASE("lifted_isotropic_spectrum: pinned values") {
  // Trace-map endpoint: the smaller eigenvalue is 1/d^2 regardless of F.
  for (int d : {2, 3, 5}) {
    for (double f : {0.0, 0.3, 1.0}) {
      const LiftedIsotropicSpectrum s = lifted_isotropic_spectrum(d, 1.0, f);
      CHECK(s.e_minus == doctest::Approx(1.0 / (d * d)).epsilon(1e-14));
      CHECK(s.minus_multiplicity == d * (d - 1) / 2);
      CHECK(s.plus_multiplicity == d * (d + 1) / 2);
    }
  }

  // Pure transposition on the maximally entangled state.
  CHECK(lifted_isotropic_spectrum(2, 0.0, 1.0).e_minus ==
        doctest::Approx(-0.5).epsilon(1e-14));

  // Interior point, cross-checked by diagonalizing the lifted image.
  const LiftedIsotropicSpectrum s = lifted_isotropic_spectrum(3, 0.5, 0.5);
  CHECK(s.e_minus == doctest::Approx(1.0 / 72.0).epsilon(1e-12));
  const ComplexMatrix image = apply_lifted(
      pcp_family_map(3, 0.5), isotropic_state({3, 0.5}).matrix(), 3);
  CHECK(min_hermitian_eigenvalue(image) ==
        doctest::Approx(1.0 / 72.0).epsilon(1e-10));

  CHECK_THROWS_AS(lifted_isotropic_spectrum(1, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(lifted_isotropic_spectrum(2, 1.5, 0.5), DomainError);
  CHECK_THROWS_AS(lifted_isotropic_spectrum(2, 0.5, 1.5), DomainError);
}

TEST_CASE("lifted_isotropic_spectrum: closed form matches full "
          "diagonalization with multiplicities") {
  for (int d = 2; d <= 4; ++d) {
    const int dim = d * d;
    for (int i = 0; i <= 5; ++i) {
      for (int j = 0; j <= 5; ++j) {
        const double mu = i / 5.0;
        const double f = j / 5.0;
        const LiftedIsotropicSpectrum s = lifted_isotropic_spectrum(d, mu, f);
        const ComplexMatrix image = apply_lifted(
            pcp_family_map(d, mu), isotropic_state({d, f}).matrix(), d);
        const RealVector eigs = hermitian_eigenvalues(image).eigenvalues;
        REQUIRE(eigs.size() == dim);
        int minus = 0, plus = 0;
        for (Eigen::Index k = 0; k < eigs.size(); ++k) {
          if (std::abs(eigs(k) - s.e_minus) <= 1e-10) ++minus;
          if (std::abs(eigs(k) - s.e_plus) <= 1e-10) ++plus;
        }
        // Levels may merge when e_plus == e_minus; count every eigenvalue.
        CHECK(minus >= s.minus_multiplicity);
        CHECK(plus >= s.plus_multiplicity);
        CHECK(minus + plus >= dim);
        CHECK(s.e_plus >= 0.0);
      }
    }
  }
}

TEST_CASE("cp_threshold: values and verdict flip") {
  CHECK(cp_threshold(2) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(cp_threshold(3) == doctest::Approx(0.75).epsilon(1e-15));
  for (int d = 2; d <= 6; ++d) {
    const double mu_star = cp_threshold(d);
    CHECK_FALSE(is_completely_positive(pcp_family_map(d, mu_star - 1e-3)).is_cp);
    CHECK(is_completely_positive(pcp_family_map(d, mu_star + 1e-3)).is_cp);
  }
}

TEST_CASE("f_comp: closed form, clamping, agreement with bisection") {
  CHECK(f_comp(2, 0.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(f_comp(2, 0.0) == 0.5);  // 1/d exactly: nothing entangled survives
  // At the CP threshold the formula hits 1 exactly.
  for (int d = 2; d <= 6; ++d) {
    CHECK(f_comp(d, cp_threshold(d)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f_comp(d, 0.0) == doctest::Approx(1.0 / d).epsilon(1e-15));
  }
  // Above the threshold and at the trace-map endpoint everything passes.
  CHECK(f_comp(2, 0.9) == 1.0);
  CHECK(f_comp(2, 1.0) == 1.0);

  CHECK(f_comp_numeric(2, 0.5) == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(f_comp_numeric(2, 0.0) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(f_comp_numeric(2, 0.9) == 1.0);

  CHECK_THROWS_AS(f_comp(1, 0.5), DomainError);
  CHECK_THROWS_AS(f_comp(2, -0.1), DomainError);
}

TEST_CASE("v_comp: pinned values, vanishing at mu=0, dimension scaling") {
  CHECK(v_comp(2, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  for (int d = 2; d <= 8; ++d) {
    CHECK(v_comp(d, 0.0) == 0.0);
  }
  // Cap beyond the CP threshold: the whole entangled interval.
  CHECK(v_comp(2, 0.9) == doctest::Approx(0.5).epsilon(1e-15));

  // Exact identity d * v_comp = mu (d-1) / (d (1-mu)) and its monotone
  // approach to mu/(1-mu) from below.
  double previous_v = 1.0;
  double previous_scaled = 0.0;
  for (int d = 2; d <= 32; ++d) {
    const double v = v_comp(d, 0.5);
    CHECK(v < previous_v);
    previous_v = v;
    const double scaled = d * v;
    CHECK(std::abs(scaled - 0.5 * (d - 1) / (d * (1 - 0.5))) < 1e-15);
    CHECK(scaled > previous_scaled);
    CHECK(scaled < 1.0);  // the large-d limit mu/(1-mu) = 1
    previous_scaled = scaled;
  }
  CHECK(64 * v_comp(64, 0.5) == doctest::Approx(63.0 / 64).epsilon(1e-14));
}

TEST_CASE("v_comp: reproduced by measuring the compatible fraction on a "
          "fidelity grid") {
  const int d = 2;
  const double mu = 0.5;
  const QuantumMap map = pcp_family_map(d, mu);
  const int grid = 200;
  int compatible_entangled = 0;
  int entangled = 0;
  for (int i = 0; i <= grid; ++i) {
    const double f = static_cast<double>(i) / grid;
    if (!isotropic_is_entangled({d, f})) continue;
    ++entangled;
    if (is_compatible(map, isotropic_state({d, f}), d).compatible) {
      ++compatible_entangled;
    }
  }
  const double measured = (1.0 - 1.0 / d) * compatible_entangled / entangled;
  CHECK(std::abs(measured - v_comp(d, mu)) < 1.0 / grid);
}

TEST_CASE("is_compatible: transposition against entangled and separable "
          "states") {
  for (int d = 2; d <= 4; ++d) {
    const CompatVerdict verdict = is_compatible(
        transposition_map(d), max_symmetric_projector(d), d);
    CHECK_FALSE(verdict.compatible);
    CHECK(verdict.min_eigenvalue == doctest::Approx(-1.0 / d).epsilon(1e-12));
  }

  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> weights{0.2, 0.5, 0.3};
    std::vector<DensityMatrix> a, b;
    for (int j = 0; j < 3; ++j) {
      a.push_back(random_density(2, 300 + 10 * trial + j));
      b.push_back(random_density(2, 400 + 10 * trial + j));
    }
    CHECK(is_compatible(transposition_map(2),
                        separable_mixture(weights, a, b), 2)
              .compatible);
  }

  CHECK_THROWS_AS(
      is_compatible(transposition_map(2), max_symmetric_projector(3), 3),
      ShapeError);
}

TEST_CASE("is_compatible: the trace-map endpoint accepts every state") {
  for (int d : {2, 3}) {
    const QuantumMap endpoint = pcp_family_map(d, 1.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      CHECK(is_compatible(endpoint, random_density(d * d, 500 + seed), d)
                .compatible);
    }
    CHECK(is_compatible(endpoint, max_symmetric_projector(d), d).compatible);
  }
}

TEST_CASE("is_compatible: verdict flips exactly at f_comp") {
  const int d = 2;
  const double mu = 0.5;
  const double boundary = f_comp(d, mu);
  const QuantumMap map = pcp_family_map(d, mu);
  for (double offset : {0.01, 0.001}) {
    CHECK(is_compatible(map, isotropic_state({d, boundary - offset}), d)
              .compatible);
    CHECK_FALSE(is_compatible(map, isotropic_state({d, boundary + offset}), d)
                    .compatible);
  }
}

TEST_CASE("compat_report / compat_scan: analytic mode") {
  const std::vector<CompatReport> single = compat_scan({2}, {0.5});
  REQUIRE(single.size() == 1);
  const CompatReport& r = single.front();
  CHECK(r.d == 2);
  CHECK(r.mu == 0.5);
  CHECK(r.cp_threshold_mu == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK_FALSE(r.is_cp);
  CHECK(r.f_comp == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(r.v_comp == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_FALSE(r.f_comp_numeric.has_value());
  CHECK_FALSE(r.all_compatible);

  // Transposition endpoint: no entangled isotropic state survives.
  for (const CompatReport& report :
       compat_scan({2, 3, 4, 5, 6, 7, 8}, {0.0})) {
    CHECK(report.v_comp == 0.0);
    CHECK_FALSE(report.is_cp);
  }

  // Analytic mode has no dimension cap.
  const CompatReport large = compat_report(64, 0.5);
  CHECK(64 * large.v_comp == doctest::Approx(63.0 / 64).epsilon(1e-12));

  // Trace-map endpoint accepts everything.
  const CompatReport trace_end = compat_report(3, 1.0);
  CHECK(trace_end.is_cp);
  CHECK(trace_end.all_compatible);
  CHECK(trace_end.f_comp == 1.0);

  CHECK_THROWS_AS(compat_scan({}, {0.5}), DomainError);
  CHECK_THROWS_AS(compat_scan({2}, {1.5}), DomainError);
}

TEST_CASE("compat_report: verification mode cross-checks and dimension cap") {
  ScanOptions opts;
  opts.verify = true;
  const CompatReport r = compat_report(2, 0.5, opts);
  REQUIRE(r.f_comp_numeric.has_value());
  REQUIRE(r.abs_diff.has_value());
  CHECK(*r.abs_diff < 1e-8);
  REQUIRE(r.min_choi_eigenvalue.has_value());
  CHECK(*r.min_choi_eigenvalue ==
        doctest::Approx((0.5 * 3 - 2) / 4.0).epsilon(1e-10));

  CHECK_THROWS_AS(compat_report(9, 0.5, opts), SizeError);
}

TEST_CASE("compat_scan: preserves the requested ordering") {
  const std::vector<int> dims{4, 2, 3};
  const std::vector<double> mus{0.6, 0.1};
  const std::vector<CompatReport> reports = compat_scan(dims, mus);
  REQUIRE(reports.size() == 6);
  int idx = 0;
  for (int d : dims) {
    for (double mu : mus) {
      CHECK(reports[idx].d == d);
      CHECK(reports[idx].mu == mu);
      ++idx;
    }
  }
}
