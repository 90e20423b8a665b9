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

// Command-line front end. Exit codes: 0 = affirmative verdict (or plain
// data), 2 = negative physics verdict, 1 = usage or input error. Every
// subcommand documents its verdict in the help text.

#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdyn/compat.hpp"
#include "qdyn/io.hpp"
#include "qdyn/maps.hpp"
#include "qdyn/semigroup.hpp"
#include "qdyn/states.hpp"

namespace {

using nlohmann::json;
using namespace qdyn;

// Ordered key/value record: JSON object or two CSV lines.
using Record = std::vector<std::pair<std::string, json>>;

struct GlobalOptions {
  std::string format;  // "csv" or "json"; per-command default when empty
  std::string out;
  bool verify = false;
  std::uint64_t seed = 0;
  double tol = 1e-10;
};

std::string scalar_to_csv(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Insertion order is kept so verdict fields print before matrix payloads.
nlohmann::ordered_json record_to_json(const Record& record) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record) obj[key] = value;
  return obj;
}

std::string record_to_csv(const Record& record) {
  std::ostringstream header, row;
  bool first = true;
  for (const auto& [key, value] : record) {
    if (value.is_object() || value.is_array()) continue;  // matrices: json only
    if (!first) {
      header << ',';
      row << ',';
    }
    first = false;
    header << key;
    row << scalar_to_csv(value);
  }
  return header.str() + "\n" + row.str() + "\n";
}

void emit_record(const Record& record, const GlobalOptions& global,
                 const std::string& default_format = "json") {
  const std::string format =
      global.format.empty() ? default_format : global.format;
  if (format == "csv") {
    std::cout << record_to_csv(record);
  } else {
    std::cout << record_to_json(record).dump(2) << '\n';
  }
}

void emit_table(const std::vector<std::string>& columns,
                const std::vector<std::vector<json>>& rows,
                const GlobalOptions& global,
                const std::string& default_format = "csv") {
  const std::string format =
      global.format.empty() ? default_format : global.format;
  std::ostringstream out;
  if (format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << scalar_to_csv(row[i]);
      }
      out << '\n';
    }
  } else {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[columns[i]] = row[i];
      array.push_back(std::move(obj));
    }
    out << array.dump(2) << '\n';
  }
  if (!global.out.empty()) {
    save_text(global.out, out.str());
  } else {
    std::cout << out.str();
  }
}

// Range syntax a:b[:step] or a comma-separated list.
std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> values;
  if (text.find(':') != std::string::npos) {
    std::istringstream in(text);
    std::string part;
    std::vector<long long> parts;
    while (std::getline(in, part, ':')) parts.push_back(std::stoll(part));
    if (parts.size() < 2 || parts.size() > 3) {
      throw DomainError("range must be a:b or a:b:step, got '" + text + "'");
    }
    const long long step = parts.size() == 3 ? parts[2] : 1;
    if (step <= 0) throw DomainError("range step must be positive");
    for (long long v = parts[0]; v <= parts[1]; v += step) {
      values.push_back(static_cast<int>(v));
    }
  } else {
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
      values.push_back(static_cast<int>(std::stoll(part)));
    }
  }
  if (values.empty()) throw DomainError("empty range '" + text + "'");
  return values;
}

std::vector<double> parse_double_range(const std::string& text) {
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    std::istringstream in(text);
    std::string part;
    std::vector<double> parts;
    while (std::getline(in, part, ':')) parts.push_back(std::stod(part));
    if (parts.size() != 3) {
      throw DomainError("real ranges need an explicit step a:b:step, got '" +
                        text + "'");
    }
    if (parts[2] <= 0) throw DomainError("range step must be positive");
    // Index-based stepping avoids drift.
    const auto count =
        static_cast<long long>(std::floor((parts[1] - parts[0]) / parts[2] +
                                          1e-9));
    for (long long i = 0; i <= count; ++i) {
      values.push_back(parts[0] + static_cast<double>(i) * parts[2]);
    }
  } else {
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) values.push_back(std::stod(part));
  }
  if (values.empty()) throw DomainError("empty range '" + text + "'");
  return values;
}

struct MapInput {
  std::string file;
  std::string family;
  int d = 2;
  double mu = 0.0;
};

void add_map_options(CLI::App* cmd, MapInput& input) {
  auto* file = cmd->add_option("--map", input.file, "Map file (JSON)");
  auto* family = cmd->add_option(
      "--family", input.family,
      "Named family: identity, transposition, trace, pcp");
  cmd->add_option("--d", input.d, "Dimension for named families");
  cmd->add_option("--mu", input.mu, "Mixing parameter for the pcp family");
  family->excludes(file);
}

QuantumMap load_map(const MapInput& input) {
  if (!input.file.empty()) return map_from_json(load_json(input.file));
  if (input.family == "identity") return QuantumMap::identity(input.d);
  if (input.family == "transposition") return transposition_map(input.d);
  if (input.family == "trace") return trace_map(input.d);
  if (input.family == "pcp") return pcp_family_map(input.d, input.mu);
  throw DomainError("no map given: use --map FILE or --family NAME");
}

void describe_map(Record& record, const MapInput& input, const QuantumMap& m) {
  record.emplace_back("d", m.dim());
  if (!input.family.empty()) {
    record.emplace_back("family", input.family);
    if (input.family == "pcp") record.emplace_back("mu", input.mu);
  }
}

int cmd_choi(const MapInput& input, const GlobalOptions& global) {
  const QuantumMap m = load_map(input);
  const CpVerdict verdict = is_completely_positive(m, global.tol);
  Record record;
  describe_map(record, input, m);
  record.emplace_back("is_cp", verdict.is_cp);
  record.emplace_back("boundary", verdict.boundary);
  record.emplace_back("min_choi_eigenvalue", verdict.min_choi_eigenvalue);
  if (!global.out.empty()) {
    save_json(global.out, matrix_to_json(m.choi().matrix));
    record.emplace_back("choi_file", global.out);
  } else {
    record.emplace_back("choi", matrix_to_json(m.choi().matrix));
  }
  emit_record(record, global);
  return verdict.is_cp ? 0 : 2;
}

int cmd_kraus(const MapInput& input, const GlobalOptions& global) {
  const QuantumMap m = load_map(input);
  Record record;
  describe_map(record, input, m);
  KrausSet operators;
  try {
    operators = m.kraus();
  } catch (const NotCpError& e) {
    record.emplace_back("is_cp", false);
    record.emplace_back("min_choi_eigenvalue", e.min_eigenvalue());
    record.emplace_back("error", "map is not completely positive; no Kraus "
                                 "form exists");
    emit_record(record, global);
    return 2;
  }
  const QuantumMap rebuilt = QuantumMap::from_kraus(operators);
  record.emplace_back("is_cp", true);
  record.emplace_back("count", operators.size());
  record.emplace_back(
      "reconstruction_residual",
      max_abs(rebuilt.superoperator() - m.superoperator()));
  if (!global.out.empty()) {
    save_json(global.out, map_to_json(m, "kraus"));
    record.emplace_back("kraus_file", global.out);
  } else {
    json ops = json::array();
    for (const ComplexMatrix& k : operators) ops.push_back(matrix_to_json(k));
    record.emplace_back("kraus", std::move(ops));
  }
  emit_record(record, global);
  return 0;
}

int cmd_apply(const MapInput& input, const std::string& state_file,
              const GlobalOptions& global) {
  const QuantumMap m = load_map(input);
  const DensityMatrix rho = state_from_json(load_json(state_file));
  const ComplexMatrix image = m.apply(rho.matrix());
  Record record;
  describe_map(record, input, m);
  const double defect = hermiticity_defect(image);
  const bool hermitian = defect <= 1e-9 * std::max(1.0, max_abs(image));
  record.emplace_back("trace", image.trace().real());
  record.emplace_back("hermiticity_defect", defect);
  bool is_state = hermitian;
  if (hermitian) {
    const double min_eig =
        min_hermitian_eigenvalue(0.5 * (image + image.adjoint()));
    record.emplace_back("min_eigenvalue", min_eig);
    is_state = min_eig >= -global.tol &&
               std::abs(image.trace() - Complex(1, 0)) <= 1e-10;
  }
  record.emplace_back("is_state", is_state);
  if (!global.out.empty()) {
    save_json(global.out, matrix_to_json(image));
    record.emplace_back("result_file", global.out);
  } else {
    record.emplace_back("result", matrix_to_json(image));
  }
  emit_record(record, global);
  return is_state ? 0 : 2;
}

int cmd_lift(const MapInput& input, int ancilla, const GlobalOptions& global) {
  const QuantumMap m = load_map(input);
  const QuantumMap lifted = m.lift(ancilla);
  Record record;
  describe_map(record, input, m);
  record.emplace_back("ancilla", ancilla);
  record.emplace_back("lifted_d", lifted.dim());
  if (!global.out.empty()) {
    save_json(global.out, map_to_json(lifted));
    record.emplace_back("map_file", global.out);
  } else {
    record.emplace_back("superoperator",
                        matrix_to_json(lifted.superoperator()));
  }
  emit_record(record, global);
  return 0;
}

struct EvolveInput {
  std::string generator_file;
  std::optional<double> qubit_a;
  std::string t_spec = "0:1:0.1";
  std::string state_file;
  std::string bloch;
};

int cmd_evolve(const EvolveInput& input, const GlobalOptions& global) {
  GklsGenerator generator = [&] {
    if (!input.generator_file.empty()) {
      return generator_from_json(load_json(input.generator_file));
    }
    if (input.qubit_a) return qubit_pauli_generator({*input.qubit_a});
    throw DomainError("no generator given: use --generator FILE or "
                      "--qubit-a A");
  }();
  const DensityMatrix initial = [&] {
    if (!input.state_file.empty()) {
      return state_from_json(load_json(input.state_file));
    }
    if (!input.bloch.empty()) {
      const std::vector<double> r = parse_double_range(input.bloch);
      if (r.size() != 3) {
        throw DomainError("--bloch needs three components x,y,z");
      }
      return bloch_to_density({r[0], r[1], r[2]});
    }
    throw DomainError("no initial state given: use --state FILE or "
                      "--bloch x,y,z");
  }();
  if (initial.dim() != generator.d) {
    throw ShapeError("initial state dimension does not match the generator");
  }
  const std::vector<double> times = parse_double_range(input.t_spec);
  for (double t : times) {
    if (t < 0) throw DomainError("evolve: t must be >= 0");
  }

  const int d = generator.d;
  std::vector<std::string> columns{"t"};
  for (int i = 0; i < d; ++i) columns.push_back("eig_" + std::to_string(i));
  if (d == 2) {
    columns.insert(columns.end(), {"bloch_x", "bloch_y", "bloch_z"});
  }
  columns.push_back("min_eigenvalue");

  const ComplexMatrix lindbladian = gkls_superoperator(generator);
  bool all_positive = true;
  std::vector<std::vector<json>> rows;
  for (double t : times) {
    const QuantumMap map =
        QuantumMap::from_superoperator(matrix_exp(t * lindbladian));
    const ComplexMatrix rho_t = map.apply(initial.matrix());
    const RealVector eigs =
        hermitian_eigenvalues(0.5 * (rho_t + rho_t.adjoint())).eigenvalues;
    std::vector<json> row{t};
    for (Eigen::Index i = 0; i < eigs.size(); ++i) row.emplace_back(eigs(i));
    if (d == 2) {
      for (int k = 1; k <= 3; ++k) {
        row.emplace_back((rho_t * pauli(k)).trace().real());
      }
    }
    row.emplace_back(eigs(0));
    rows.push_back(std::move(row));
    if (eigs(0) < -global.tol) all_positive = false;
  }
  emit_table(columns, rows, global);
  return all_positive ? 0 : 2;
}

int cmd_classify_qubit(double a, const GlobalOptions& global) {
  const SemigroupClass verdict = qubit_classification({a});
  Record record;
  record.emplace_back("a", a);
  record.emplace_back("class", to_string(verdict));
  record.emplace_back("cp_threshold_a", 0.0);
  record.emplace_back("positivity_threshold_a", -1.0);
  emit_record(record, global);
  return verdict == SemigroupClass::Cp ? 0 : 2;
}

int cmd_isotropic(int d, double fidelity, const GlobalOptions& global) {
  const IsotropicParams params{d, fidelity};
  const DensityMatrix rho = isotropic_state(params);
  const bool entangled = isotropic_is_entangled(params);
  Record record;
  record.emplace_back("d", d);
  record.emplace_back("F", fidelity);
  record.emplace_back("entangled", entangled);
  record.emplace_back("separability_threshold", 1.0 / d);
  record.emplace_back("eigenvalue_bulk", (1.0 - fidelity) / (d * d - 1.0));
  record.emplace_back("eigenvalue_top", fidelity);
  if (!global.out.empty()) {
    save_json(global.out, isotropic_to_json(params));
    record.emplace_back("state_file", global.out);
  } else {
    record.emplace_back("state", state_to_json(rho));
  }
  emit_record(record, global);
  return entangled ? 0 : 2;
}

int cmd_compat_scan(const std::string& d_spec, const std::string& mu_spec,
                    double query_fidelity, const GlobalOptions& global) {
  ScanOptions opts;
  opts.verify = global.verify;
  opts.query_fidelity = query_fidelity;
  const std::vector<CompatReport> reports =
      compat_scan(parse_int_range(d_spec), parse_double_range(mu_spec), opts);
  const std::string format = global.format.empty() ? "csv" : global.format;
  std::string text;
  if (format == "csv") {
    text = compat_reports_to_csv(reports);
  } else {
    text = compat_reports_to_json(reports).dump(2) + "\n";
  }
  if (!global.out.empty()) {
    save_text(global.out, text);
  } else {
    std::cout << text;
  }
  return 0;
}

int cmd_cp_threshold(const std::string& d_spec, const GlobalOptions& global) {
  std::vector<std::string> columns{"d", "mu_threshold"};
  if (global.verify) columns.push_back("verified");
  std::vector<std::vector<json>> rows;
  for (int d : parse_int_range(d_spec)) {
    const double mu_star = cp_threshold(d);
    std::vector<json> row{d, mu_star};
    if (global.verify) {
      const bool below =
          is_completely_positive(pcp_family_map(d, mu_star - 1e-3)).is_cp;
      const bool above =
          is_completely_positive(pcp_family_map(d, mu_star + 1e-3)).is_cp;
      row.emplace_back(!below && above);
    }
    rows.push_back(std::move(row));
  }
  emit_table(columns, rows, global);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of linear dynamical maps on finite-dimensional "
               "quantum systems: Choi spectra, Kraus forms, dynamical "
               "semigroups and compatibility domains."};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", global.out, "Write the primary artifact to PATH");
  app.add_flag("--verify", global.verify,
               "Cross-check closed forms numerically where supported");
  app.add_option("--seed", global.seed, "Seed for randomized operations");
  app.add_option("--tol", global.tol,
                 "Negativity tolerance for positivity verdicts");
  app.fallthrough();

  std::function<int()> run;

  auto* choi = app.add_subcommand(
      "choi", "Choi matrix and CP verdict (exit 0 = CP, 2 = not CP)");
  auto choi_input = std::make_shared<MapInput>();
  add_map_options(choi, *choi_input);
  choi->callback([&run, choi_input, &global] {
    run = [choi_input, &global] { return cmd_choi(*choi_input, global); };
  });

  auto* kraus = app.add_subcommand(
      "kraus", "Kraus decomposition (exit 0 = exists, 2 = not CP)");
  auto kraus_input = std::make_shared<MapInput>();
  add_map_options(kraus, *kraus_input);
  kraus->callback([&run, kraus_input, &global] {
    run = [kraus_input, &global] { return cmd_kraus(*kraus_input, global); };
  });

  auto* apply = app.add_subcommand(
      "apply", "Apply a map to a state (exit 0 = output is a state)");
  auto apply_input = std::make_shared<MapInput>();
  auto apply_state = std::make_shared<std::string>();
  add_map_options(apply, *apply_input);
  apply->add_option("--state", *apply_state, "State file (JSON)")->required();
  apply->callback([&run, apply_input, apply_state, &global] {
    run = [apply_input, apply_state, &global] {
      return cmd_apply(*apply_input, *apply_state, global);
    };
  });

  auto* lift = app.add_subcommand(
      "lift", "Tensor a map with the identity on an ancilla");
  auto lift_input = std::make_shared<MapInput>();
  auto lift_n = std::make_shared<int>(1);
  add_map_options(lift, *lift_input);
  lift->add_option("--n", *lift_n, "Ancilla dimension")->required();
  lift->callback([&run, lift_input, lift_n, &global] {
    run = [lift_input, lift_n, &global] {
      return cmd_lift(*lift_input, *lift_n, global);
    };
  });

  auto* evolve = app.add_subcommand(
      "evolve", "Evolve a state under a semigroup generator "
                "(exit 0 = trajectory stayed positive)");
  auto evolve_input = std::make_shared<EvolveInput>();
  evolve->add_option("--generator", evolve_input->generator_file,
                     "Generator file (JSON)");
  double qubit_a_value = 0.0;
  auto* qubit_a = evolve->add_option(
      "--qubit-a", qubit_a_value,
      "Dissipative qubit family with coefficient matrix diag(1, 1, a)");
  evolve->add_option("--t", evolve_input->t_spec,
                     "Times: list t1,t2,... or range a:b:step");
  evolve->add_option("--state", evolve_input->state_file,
                     "Initial state file (JSON)");
  evolve->add_option("--bloch", evolve_input->bloch,
                     "Initial qubit state as Bloch components x,y,z");
  evolve->callback([&run, evolve_input, qubit_a, &qubit_a_value, &global] {
    if (qubit_a->count() > 0) evolve_input->qubit_a = qubit_a_value;
    run = [evolve_input, &global] { return cmd_evolve(*evolve_input, global); };
  });

  auto* classify = app.add_subcommand(
      "classify-qubit", "Classify the dissipative qubit family "
                        "(exit 0 = CP, 2 otherwise)");
  auto classify_a = std::make_shared<double>(0.0);
  classify->add_option("--a", *classify_a, "Anisotropy coefficient")
      ->required();
  classify->callback([&run, classify_a, &global] {
    run = [classify_a, &global] {
      return cmd_classify_qubit(*classify_a, global);
    };
  });

  auto* isotropic = app.add_subcommand(
      "isotropic", "Build an isotropic state and classify it "
                   "(exit 0 = entangled, 2 = separable)");
  auto iso_d = std::make_shared<int>(2);
  auto iso_f = std::make_shared<double>(0.0);
  isotropic->add_option("--d", *iso_d, "Local dimension")->required();
  isotropic->add_option("--F", *iso_f, "Fidelity parameter in [0, 1]")
      ->required();
  isotropic->callback([&run, iso_d, iso_f, &global] {
    run = [iso_d, iso_f, &global] {
      return cmd_isotropic(*iso_d, *iso_f, global);
    };
  });

  auto* scan = app.add_subcommand(
      "compat-scan", "Compatibility domains of the pcp family across "
                     "(d, mu); CSV by default");
  auto scan_d = std::make_shared<std::string>("2");
  auto scan_mu = std::make_shared<std::string>("0:1:0.1");
  auto scan_f = std::make_shared<double>(1.0);
  scan->add_option("--d", *scan_d, "Dimensions: list or range a:b[:step]");
  scan->add_option("--mu", *scan_mu, "Mixing parameters: list or a:b:step");
  scan->add_option("--F", *scan_f,
                   "Fidelity at which lifted eigenvalues are reported");
  scan->callback([&run, scan_d, scan_mu, scan_f, &global] {
    run = [scan_d, scan_mu, scan_f, &global] {
      return cmd_compat_scan(*scan_d, *scan_mu, *scan_f, global);
    };
  });

  auto* threshold = app.add_subcommand(
      "cp-threshold", "CP threshold mu = d/(d+1) of the pcp family");
  auto threshold_d = std::make_shared<std::string>("2");
  threshold->add_option("--d", *threshold_d,
                        "Dimensions: list or range a:b[:step]");
  threshold->callback([&run, threshold_d, &global] {
    run = [threshold_d, &global] {
      return cmd_cp_threshold(*threshold_d, global);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return run ? run() : 1;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return 1;
  }
}
