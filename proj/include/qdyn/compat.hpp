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

#ifndef QDYN_COMPAT_HPP
#define QDYN_COMPAT_HPP

#include <optional>
#include <vector>

#include "qdyn/maps.hpp"
#include "qdyn/states.hpp"

namespace qdyn {

/// Eigenvalues of (Lambda_mu x id_d)[rho_F], which consists of exactly two
/// degenerate levels: e_plus with multiplicity d(d+1)/2 and e_minus with
/// multiplicity d(d-1)/2.
struct LiftedIsotropicSpectrum {
  double e_plus = 0.0;
  int plus_multiplicity = 0;
  double e_minus = 0.0;
  int minus_multiplicity = 0;
};

/// Closed form e_pm = (d pm d^2 F mp mu (d^2 F - 1)) / (d^2 (d pm 1)),
/// verified against full diagonalization of the lifted image.
LiftedIsotropicSpectrum lifted_isotropic_spectrum(int d, double mu,
                                                  double fidelity);

/// mu value d/(d+1) at which the family Lambda_mu becomes completely
/// positive; below it the smallest Choi eigenvalue (mu(1+d) - d)/d^2 is
/// negative.
double cp_threshold(int d);

/// Largest fidelity whose isotropic state stays a state under the lifted
/// map: (d - mu)/(d^2 (1 - mu)), clamped to 1. Equals 1 exactly from the CP
/// threshold on (at mu = 1 the formula is singular but the trace map accepts
/// every state, so 1 is reported).
double f_comp(int d, double mu);

/// Length of the fidelity interval of entangled compatible isotropic
/// states: max(0, min(f_comp, 1) - 1/d). Equals mu(d-1)/(d^2(1-mu)) in the
/// non-CP regime and caps at 1 - 1/d beyond it.
double v_comp(int d, double mu);

/// Root of the lifted minimum eigenvalue in F, located by bisection on the
/// numerically diagonalized spectrum of (Lambda_mu x id_d)[rho_F]. This path
/// shares no algebra with f_comp and exists to cross-check it.
double f_comp_numeric(int d, double mu);

struct CompatVerdict {
  bool compatible = false;
  double min_eigenvalue = 0.0;
};

/// A state is compatible with a map when the lifted image
/// (m x id_n)[rho] has min eigenvalue >= -tol.
CompatVerdict is_compatible(const QuantumMap& m, const DensityMatrix& rho,
                            int ancilla_dim, double tol = 1e-10);

/// Per-(d, mu) record of the compatibility analysis of the family
/// Lambda_mu on isotropic states.
struct CompatReport {
  int d = 0;
  double mu = 0.0;
  double cp_threshold_mu = 0.0;  // d/(d+1)
  bool is_cp = false;
  bool all_compatible = false;   // every isotropic state stays a state
  double query_fidelity = 1.0;
  double e_plus = 0.0;           // lifted eigenvalues at query_fidelity
  double e_minus = 0.0;
  double f_comp = 0.0;
  double v_comp = 0.0;
  /// Filled in verification mode only.
  std::optional<double> f_comp_numeric;
  std::optional<double> abs_diff;
  std::optional<double> min_choi_eigenvalue;
};

struct ScanOptions {
  /// Re-derive the analytic values numerically (Choi spectrum, bisection
  /// root); limited to d <= verify_dim_cap.
  bool verify = false;
  int verify_dim_cap = 8;
  /// Fidelity at which e_plus / e_minus are reported.
  double query_fidelity = 1.0;
};

CompatReport compat_report(int d, double mu, const ScanOptions& opts = {});

/// One report per (d, mu) pair, in the requested order.
std::vector<CompatReport> compat_scan(const std::vector<int>& dims,
                                      const std::vector<double>& mus,
                                      const ScanOptions& opts = {});

}  // namespace qdyn

#endif  // QDYN_COMPAT_HPP
