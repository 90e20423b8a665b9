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

#ifndef QDYN_IO_HPP
#define QDYN_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdyn/compat.hpp"
#include "qdyn/maps.hpp"
#include "qdyn/operators.hpp"
#include "qdyn/semigroup.hpp"
#include "qdyn/states.hpp"

namespace qdyn {

// File formats. All matrices are stored as
//   {"rows": n, "cols": m, "data": [[re, im], ...]}
// with entries in row-major order; doubles round-trip exactly.

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// States are the matrix format, optionally preceded by a
/// {"kind": ..., "params": ...} header for the named families
/// "isotropic" (params d, F) and "symmetric-projector" (params d).
/// On read the header, when present, is authoritative.
nlohmann::json state_to_json(const DensityMatrix& rho);
nlohmann::json isotropic_to_json(const IsotropicParams& p);
nlohmann::json symmetric_projector_to_json(int d);
DensityMatrix state_from_json(const nlohmann::json& j);

/// Maps: {"d": n, "representation": "superoperator"|"kraus"|"choi",
///        "payload": matrix or list of matrices}.
nlohmann::json map_to_json(const QuantumMap& m,
                           const std::string& representation = "superoperator");
QuantumMap map_from_json(const nlohmann::json& j);

/// Generators: {"d": n, "hamiltonian": matrix, "kossakowski": matrix,
///              "basis": "gell-mann" or list of matrices}.
nlohmann::json generator_to_json(const GklsGenerator& g);
GklsGenerator generator_from_json(const nlohmann::json& j);

nlohmann::json compat_report_to_json(const CompatReport& r);
nlohmann::json compat_reports_to_json(const std::vector<CompatReport>& rs);

/// CSV with the fixed header
/// d,mu,cp_threshold,is_cp,f_comp,v_comp,f_comp_numeric,abs_diff;
/// the last two cells stay empty outside verification mode.
std::string compat_reports_to_csv(const std::vector<CompatReport>& rs);

/// Shortest decimal form that parses back to the identical double
/// (printf %.17g).
std::string format_double(double x);

void save_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json load_json(const std::filesystem::path& path);

void save_text(const std::filesystem::path& path, const std::string& text);

}  // namespace qdyn

#endif  // QDYN_IO_HPP
