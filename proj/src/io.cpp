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

#include "qdyn/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qdyn {

namespace {

using nlohmann::json;

// Writer matched against the Gell-Mann basis so generator files stay small.
bool matches_gell_mann(const GklsGenerator& g) {
  const std::vector<ComplexMatrix> reference = gell_mann_basis(g.d);
  if (reference.size() != g.basis.size()) return false;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (max_abs(reference[i] - g.basis[i]) > 1e-15) return false;
  }
  return true;
}

}  // namespace

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

json matrix_to_json(const ComplexMatrix& m) {
  if (!all_finite(m)) {
    throw DomainError("matrix_to_json: entries must be finite");
  }
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  try {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    if (rows < 1 || cols < 1 || rows > kMaxDim || cols > kMaxDim) {
      throw ParseError("matrix: rows/cols out of range");
    }
    const json& data = j.at("data");
    if (!data.is_array() ||
        static_cast<Eigen::Index>(data.size()) != rows * cols) {
      throw ParseError("matrix: data must hold rows*cols entries");
    }
    ComplexMatrix m(rows, cols);
    Eigen::Index flat = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++flat) {
        const json& entry = data[flat];
        if (!entry.is_array() || entry.size() != 2) {
          throw ParseError("matrix: each entry must be a [re, im] pair");
        }
        m(i, j2) = Complex(entry[0].get<double>(), entry[1].get<double>());
      }
    }
    if (!all_finite(m)) {
      throw ParseError("matrix: entries must be finite");
    }
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

json state_to_json(const DensityMatrix& rho) {
  return matrix_to_json(rho.matrix());
}

json isotropic_to_json(const IsotropicParams& p) {
  json j = matrix_to_json(isotropic_state(p).matrix());
  j["kind"] = "isotropic";
  j["params"] = {{"d", p.d}, {"F", p.fidelity}};
  return j;
}

json symmetric_projector_to_json(int d) {
  json j = matrix_to_json(max_symmetric_projector(d).matrix());
  j["kind"] = "symmetric-projector";
  j["params"] = {{"d", d}};
  return j;
}

DensityMatrix state_from_json(const json& j) {
  try {
    if (j.contains("kind")) {
      const auto kind = j.at("kind").get<std::string>();
      const json& params = j.at("params");
      if (kind == "isotropic") {
        return isotropic_state(
            {params.at("d").get<int>(), params.at("F").get<double>()});
      }
      if (kind == "symmetric-projector") {
        return max_symmetric_projector(params.at("d").get<int>());
      }
      throw ParseError("state: unknown kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("state: ") + e.what());
  }
  return DensityMatrix(matrix_from_json(j));
}

json map_to_json(const QuantumMap& m, const std::string& representation) {
  json j{{"d", m.dim()}, {"representation", representation}};
  if (representation == "superoperator") {
    j["payload"] = matrix_to_json(m.superoperator());
  } else if (representation == "choi") {
    j["payload"] = matrix_to_json(m.choi().matrix);
  } else if (representation == "kraus") {
    json ops = json::array();
    for (const ComplexMatrix& k : m.kraus()) {
      ops.push_back(matrix_to_json(k));
    }
    j["payload"] = std::move(ops);
  } else {
    throw DomainError("map_to_json: unknown representation '" +
                      representation + "'");
  }
  return j;
}

QuantumMap map_from_json(const json& j) {
  try {
    const int d = j.at("d").get<int>();
    const auto representation = j.at("representation").get<std::string>();
    const json& payload = j.at("payload");
    if (representation == "superoperator") {
      QuantumMap m = QuantumMap::from_superoperator(matrix_from_json(payload));
      if (m.dim() != d) {
        throw ParseError("map: superoperator dimension does not match d");
      }
      return m;
    }
    if (representation == "choi") {
      return QuantumMap::from_choi(ChoiMatrix{d, matrix_from_json(payload)});
    }
    if (representation == "kraus") {
      if (!payload.is_array() || payload.empty()) {
        throw ParseError("map: kraus payload must be a nonempty list");
      }
      KrausSet operators;
      for (const json& op : payload) {
        operators.push_back(matrix_from_json(op));
      }
      QuantumMap m = QuantumMap::from_kraus(operators);
      if (m.dim() != d) {
        throw ParseError("map: Kraus operator dimension does not match d");
      }
      return m;
    }
    throw ParseError("map: unknown representation '" + representation + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("map: ") + e.what());
  }
}

json generator_to_json(const GklsGenerator& g) {
  json j{{"d", g.d},
         {"hamiltonian", matrix_to_json(g.hamiltonian)},
         {"kossakowski", matrix_to_json(g.kossakowski)}};
  if (matches_gell_mann(g)) {
    j["basis"] = "gell-mann";
  } else {
    json basis = json::array();
    for (const ComplexMatrix& f : g.basis) basis.push_back(matrix_to_json(f));
    j["basis"] = std::move(basis);
  }
  return j;
}

GklsGenerator generator_from_json(const json& j) {
  try {
    GklsGenerator g;
    g.d = j.at("d").get<int>();
    g.hamiltonian = matrix_from_json(j.at("hamiltonian"));
    g.kossakowski = matrix_from_json(j.at("kossakowski"));
    const json& basis = j.at("basis");
    if (basis.is_string()) {
      if (basis.get<std::string>() != "gell-mann") {
        throw ParseError("generator: unknown basis '" +
                         basis.get<std::string>() + "'");
      }
      g.basis = gell_mann_basis(g.d);
    } else {
      for (const json& f : basis) g.basis.push_back(matrix_from_json(f));
    }
    validate(g);
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("generator: ") + e.what());
  }
}

json compat_report_to_json(const CompatReport& r) {
  json j{{"d", r.d},
         {"mu", r.mu},
         {"cp_threshold", r.cp_threshold_mu},
         {"is_cp", r.is_cp},
         {"all_compatible", r.all_compatible},
         {"query_fidelity", r.query_fidelity},
         {"e_plus", r.e_plus},
         {"e_minus", r.e_minus},
         {"f_comp", r.f_comp},
         {"v_comp", r.v_comp}};
  if (r.f_comp_numeric) j["f_comp_numeric"] = *r.f_comp_numeric;
  if (r.abs_diff) j["abs_diff"] = *r.abs_diff;
  if (r.min_choi_eigenvalue) j["min_choi_eigenvalue"] = *r.min_choi_eigenvalue;
  return j;
}

json compat_reports_to_json(const std::vector<CompatReport>& rs) {
  json j = json::array();
  for (const CompatReport& r : rs) j.push_back(compat_report_to_json(r));
  return j;
}

std::string compat_reports_to_csv(const std::vector<CompatReport>& rs) {
  std::ostringstream out;
  out << "d,mu,cp_threshold,is_cp,f_comp,v_comp,f_comp_numeric,abs_diff\n";
  for (const CompatReport& r : rs) {
    out << r.d << ',' << format_double(r.mu) << ','
        << format_double(r.cp_threshold_mu) << ','
        << (r.is_cp ? "true" : "false") << ',' << format_double(r.f_comp)
        << ',' << format_double(r.v_comp) << ',';
    if (r.f_comp_numeric) out << format_double(*r.f_comp_numeric);
    out << ',';
    if (r.abs_diff) out << format_double(*r.abs_diff);
    out << '\n';
  }
  return out.str();
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw Error("save_json: cannot open '" + path.string() + "' for writing");
  }
  out << j.dump(2) << '\n';
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("load_json: cannot open '" + path.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("load_json: '" + path.string() + "': " + e.what());
  }
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw Error("save_text: cannot open '" + path.string() + "' for writing");
  }
  out << text;
}

}  // namespace qdyn
