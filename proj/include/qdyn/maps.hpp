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

#ifndef QDYN_MAPS_HPP
#define QDYN_MAPS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qdyn/operators.hpp"
#include "qdyn/states.hpp"

namespace qdyn {

/// Relative cutoff for discarding near-zero Choi eigenvalues when extracting
/// a Kraus decomposition; also the negativity threshold below which no Kraus
/// form exists.
inline constexpr double kKrausRankTol = 1e-12;

/// Choi matrix of a map on M_d: the lifted map applied to the maximally
/// entangled projector, (Lambda x id)[P_sym]. The map acts on the FIRST
/// tensor factor, and P_sym carries trace 1, so trace-preserving maps have
/// Choi trace 1. Both conventions differ across the literature; they are
/// pinned here and relied on throughout.
struct ChoiMatrix {
  int d = 0;
  ComplexMatrix matrix;  // d^2 x d^2
};

using KrausSet = std::vector<ComplexMatrix>;

/// A linear map on d x d matrices. The canonical representation is the
/// superoperator matrix acting on column-vectorized inputs; Choi and Kraus
/// forms are derived on demand. Values are immutable after construction and
/// safe to share across threads.
class QuantumMap {
 public:
  static QuantumMap identity(int d);
  /// From a d^2 x d^2 superoperator acting on column-vectorized matrices.
  static QuantumMap from_superoperator(ComplexMatrix s);
  /// From Kraus operators: x -> sum_a K_a x K_a^dag.
  static QuantumMap from_kraus(const KrausSet& operators);
  static QuantumMap from_choi(const ChoiMatrix& c);

  int dim() const { return d_; }
  const ComplexMatrix& superoperator() const { return super_; }

  /// Apply the map to a d x d matrix.
  ComplexMatrix apply(const ComplexMatrix& x) const;

  /// Choi matrix, computed by reshuffling the superoperator.
  ChoiMatrix choi() const;

  /// Kraus decomposition; throws NotCpError if the Choi matrix has an
  /// eigenvalue below -tol * max eigenvalue.
  KrausSet kraus(double tol = kKrausRankTol) const;

  /// The map acting on the first factor of a (d * ancilla_dim)-dimensional
  /// composite, identity on the second. Materializes the lifted
  /// superoperator; see apply_lifted for the allocation-free alternative.
  QuantumMap lift(int ancilla_dim) const;

  /// Dual map under the trace pairing Tr(Lambda[x] y) = Tr(x Lambda#[y]).
  QuantumMap dual() const;

  /// Composition (*this) o inner.
  QuantumMap compose(const QuantumMap& inner) const;

 private:
  QuantumMap(int d, ComplexMatrix s) : d_(d), super_(std::move(s)) {}

  int d_;
  ComplexMatrix super_;
};

/// (m x id_n)[x] without materializing the lifted superoperator.
/// x must be square of dimension m.dim() * ancilla_dim.
ComplexMatrix apply_lifted(const QuantumMap& m, const ComplexMatrix& x,
                           int ancilla_dim);

/// Outcome of the Choi-spectrum test for complete positivity.
struct CpVerdict {
  bool is_cp = false;
  /// Set when |min eigenvalue| is within tolerance of zero, i.e. the map
  /// sits on the boundary of the CP cone.
  bool boundary = false;
  double min_choi_eigenvalue = 0.0;
  /// When not CP: the maximally entangled projector, which the lifted map
  /// sends out of the state space by the Choi criterion.
  std::optional<DensityMatrix> witness;
};

/// A map is completely positive iff its Choi matrix is positive
/// semidefinite; tol is the relative negativity tolerance.
CpVerdict is_completely_positive(const QuantumMap& m,
                                 double tol = kPsdTolFactor);

/// Kraus operators from a positive-semidefinite Choi matrix. The number of
/// operators equals the numerical rank of c at the given relative cutoff.
KrausSet kraus_from_choi(const ChoiMatrix& c, double tol = kKrausRankTol);

/// Transposition x -> x^T.
QuantumMap transposition_map(int d);

/// Normalized trace map x -> Tr(x) I / d.
QuantumMap trace_map(int d);

/// Convex family mu * (trace map) + (1 - mu) * (transposition), mu in [0, 1].
/// Positive and unital for every mu; completely positive iff mu >= d/(d+1).
QuantumMap pcp_family_map(int d, double mu);

/// Conjugation x -> U x U^dag; u must be unitary within 1e-10.
QuantumMap unitary_channel(const ComplexMatrix& u);

bool is_trace_preserving(const QuantumMap& m, double tol = 1e-10);
bool is_unital(const QuantumMap& m, double tol = 1e-10);

/// Result of a randomized search for a positivity violation. A certified
/// verdict carries an input state whose image has a negative eigenvalue;
/// "not falsified" is NOT a proof of positivity.
struct PositivityProbe {
  bool certified_not_positive = false;
  double min_eigenvalue = 0.0;  // most negative output eigenvalue observed
  std::optional<DensityMatrix> witness;
};

/// Sample seeded random pure states, refine each by projected gradient
/// descent on the minimum output eigenvalue, and report the first violation
/// found (if any).
PositivityProbe positivity_probe(const QuantumMap& m, int samples,
                                 std::uint64_t seed);

}  // namespace qdyn

#endif  // QDYN_MAPS_HPP
