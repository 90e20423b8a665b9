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

#include "qdyn/compat.hpp"

#include <cmath>
#include <string>

namespace qdyn {

namespace {

void validate_params(int d, double mu, const char* who) {
  if (d < 2) {
    throw DomainError(std::string(who) + ": d must be >= 2, got " +
                      std::to_string(d));
  }
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError(std::string(who) + ": mu must lie in [0, 1], got " +
                      std::to_string(mu));
  }
}

double lifted_min_eigenvalue(const QuantumMap& map, int d, double fidelity) {
  const DensityMatrix rho = isotropic_state({d, fidelity});
  const ComplexMatrix image = apply_lifted(map, rho.matrix(), d);
  return min_hermitian_eigenvalue(image);
}

}  // namespace

LiftedIsotropicSpectrum lifted_isotropic_spectrum(int d, double mu,
                                                  double fidelity) {
  validate_params(d, mu, "lifted_isotropic_spectrum");
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw DomainError("lifted_isotropic_spectrum: fidelity must lie in [0, 1]");
  }
  const double dd = d;
  const double d2f = dd * dd * fidelity;
  // The lifted image is [a + b mu/d^2] I + [b (1-mu)/d] V with
  // a = (1-F)/(d^2-1) and b = (d^2 F - 1)/(d^2-1); the two eigenvalues
  // below are that combination on the +-1 eigenspaces of V. The trace
  // identity mult_plus * e_plus + mult_minus * e_minus = 1 pins the signs.
  LiftedIsotropicSpectrum s;
  s.e_plus = (dd + d2f - mu * (d2f - 1.0)) / (dd * dd * (dd + 1.0));
  s.plus_multiplicity = d * (d + 1) / 2;
  s.e_minus = (dd - d2f + mu * (d2f - 1.0)) / (dd * dd * (dd - 1.0));
  s.minus_multiplicity = d * (d - 1) / 2;
  return s;
}

double cp_threshold(int d) {
  if (d < 2) throw DomainError("cp_threshold: d must be >= 2");
  return static_cast<double>(d) / (d + 1);
}

double f_comp(int d, double mu) {
  validate_params(d, mu, "f_comp");
  if (mu == 1.0) return 1.0;  // trace map: every state is compatible
  const double dd = d;
  const double value = (dd - mu) / (dd * dd * (1.0 - mu));
  return std::min(value, 1.0);
}

double v_comp(int d, double mu) {
  validate_params(d, mu, "v_comp");
  return std::max(0.0, f_comp(d, mu) - 1.0 / d);
}

double f_comp_numeric(int d, double mu) {
  validate_params(d, mu, "f_comp_numeric");
  if (mu == 1.0) return 1.0;
  const QuantumMap map = pcp_family_map(d, mu);
  if (lifted_min_eigenvalue(map, d, 1.0) >= -1e-13) {
    return 1.0;  // no violation even at the entangled extreme
  }
  // The minimum eigenvalue is affine and decreasing in F, positive at 1/d.
  double lo = 1.0 / d;
  double hi = 1.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (lifted_min_eigenvalue(map, d, mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CompatVerdict is_compatible(const QuantumMap& m, const DensityMatrix& rho,
                            int ancilla_dim, double tol) {
  if (rho.dim() != m.dim() * ancilla_dim) {
    throw ShapeError("is_compatible: state dimension " +
                     std::to_string(rho.dim()) + " != map dimension " +
                     std::to_string(m.dim()) + " * " +
                     std::to_string(ancilla_dim));
  }
  const ComplexMatrix image = apply_lifted(m, rho.matrix(), ancilla_dim);
  const double min_eig = min_hermitian_eigenvalue(image);
  return CompatVerdict{min_eig >= -tol, min_eig};
}

CompatReport compat_report(int d, double mu, const ScanOptions& opts) {
  validate_params(d, mu, "compat_report");
  CompatReport r;
  r.d = d;
  r.mu = mu;
  r.cp_threshold_mu = cp_threshold(d);
  r.query_fidelity = opts.query_fidelity;
  const LiftedIsotropicSpectrum spectrum =
      lifted_isotropic_spectrum(d, mu, opts.query_fidelity);
  r.e_plus = spectrum.e_plus;
  r.e_minus = spectrum.e_minus;
  r.f_comp = f_comp(d, mu);
  r.v_comp = v_comp(d, mu);
  r.all_compatible = r.f_comp >= 1.0;
  // Smallest Choi eigenvalue of Lambda_mu is (mu(1+d) - d)/d^2; its sign
  // decides complete positivity without building the d^2 x d^2 matrix.
  const double lambda_minus =
      (mu * (1.0 + d) - d) / (static_cast<double>(d) * d);
  r.is_cp = lambda_minus >= -1e-14;
  if (opts.verify) {
    if (d > opts.verify_dim_cap) {
      throw SizeError("compat_report: verification mode is capped at d <= " +
                      std::to_string(opts.verify_dim_cap) + ", got d = " +
                      std::to_string(d));
    }
    const CpVerdict verdict = is_completely_positive(pcp_family_map(d, mu));
    r.is_cp = verdict.is_cp;
    r.min_choi_eigenvalue = verdict.min_choi_eigenvalue;
    r.f_comp_numeric = f_comp_numeric(d, mu);
    r.abs_diff = std::abs(*r.f_comp_numeric - r.f_comp);
  }
  return r;
}

std::vector<CompatReport> compat_scan(const std::vector<int>& dims,
                                      const std::vector<double>& mus,
                                      const ScanOptions& opts) {
  if (dims.empty() || mus.empty()) {
    throw DomainError("compat_scan: dimension and mu lists must be nonempty");
  }
  std::vector<CompatReport> reports;
  reports.reserve(dims.size() * mus.size());
  for (int d : dims) {
    for (double mu : mus) {
      reports.push_back(compat_report(d, mu, opts));
    }
  }
  return reports;
}

}  // namespace qdyn
