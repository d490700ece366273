// Copyright 2026 The fermsim Authors
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

#include "fermsim_tools/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermsim/bk_encoding.hpp"
#include "fermsim/channels.hpp"
#include "fermsim/compiler.hpp"
#include "fermsim/entanglement.hpp"
#include "fermsim/io.hpp"
#include "fermsim/schema.hpp"
#include "fermsim/superselection.hpp"
#include "fermsim_tools/verify.hpp"

namespace fermsim::cli {
namespace {

struct Options {
  std::string suite;
  int n = 0;
  int m = 0;
  std::optional<double> tol;
  std::uint64_t seed = 7;
  int jobs = 1;
  std::string in;
  std::string out;
  std::string report;
  std::string measure = "cf";
  std::string mode = "table";
  std::optional<int> j;
  std::vector<int> keep;
};

// Signals an input or IO problem, reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json validity_json(const ValidityReport& r) {
  return {{"valid", r.valid},
          {"min_eigenvalue", r.min_eigenvalue},
          {"trace", r.trace},
          {"hermiticity_residual", r.hermiticity_residual},
          {"commutator_residual", r.commutator_residual},
          {"reason", r.reason}};
}

json separability_json(const SeparabilityResult& s) {
  return {{"separable", s.separable}, {"witness", s.witness}, {"detail", s.detail}};
}

Matrix load_state(const Options& o, int& n, double tol) {
  if (o.in.empty()) throw InputError("--in is required");
  const Matrix rho = density_from_json(read_json_file(o.in), &n);
  const ValidityReport v = is_valid_fqt_state(rho, n, tol);
  if (!v.valid) {
    throw InputError(json{{"error", "invalid state"}, {"validity", validity_json(v)}}.dump());
  }
  return rho;
}

int cmd_verify(const Options& o, std::ostream& out) {
  verify::SuiteOptions so;
  so.n = o.n;
  so.m = o.m;
  so.tol = o.tol;
  so.seed = o.seed;
  so.jobs = o.jobs;
  const verify::SuiteReport report = verify::run_suite(o.suite, so);
  emit(dump(verify::report_to_json(report)), o.out, out);
  return report.pass() ? kExitOk : kExitCheckFailure;
}

int cmd_entanglement(const Options& o, std::ostream& out) {
  const double tol = o.tol.value_or(kDefaultTol);
  int n = 0;
  const Matrix rho = load_state(o, n, tol);
  json report;
  report["measure"] = o.measure;
  report["n"] = n;
  report["validity"] = validity_json(is_valid_fqt_state(rho, n, tol));
  if (o.measure == "cf" || o.measure == "eof") {
    if (n != 2) throw InputError("measure " + o.measure + " needs a two-mode state");
    const SectorMeasure cf = fermionic_concurrence(rho, tol);
    const SectorMeasure s = o.measure == "cf" ? cf : fermionic_eof_lower(rho, tol);
    report["value"] = s.value;
    report["sectors"] = {{"p0", s.p0}, {"p1", s.p1}, {"value0", s.c0}, {"value1", s.c1}};
    if (o.measure == "eof") {
      report["bound"] = "lower";
      report["concurrence_bound"] = eof_from_concurrence(cf.value);
    }
    report["separability"] = {{"full", separability_json(full_separability_test(rho, n, tol))},
                              {"bipartite", separability_json(bipartite_sector_separability(rho, tol))}};
  } else if (o.measure == "separability") {
    const SeparabilityResult full = full_separability_test(rho, n, tol);
    report["separable"] = full.separable;
    report["full"] = separability_json(full);
    if (n == 2) report["bipartite"] = separability_json(bipartite_sector_separability(rho, tol));
  } else if (o.measure == "monogamy") {
    if (n != 3) throw InputError("measure monogamy needs a three-mode state");
    const MonogamyResult m = monogamy_witness(rho, tol);
    report["c_ab"] = m.c_ab;
    report["c_ac"] = m.c_ac;
    report["sum_of_squares"] = m.sum_of_squares;
    report["exceeds_ckw"] = m.exceeds_ckw;
  }
  emit(dump(report), o.out, out);
  return kExitOk;
}

int cmd_compile(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw InputError("--in is required");
  const double tol = o.tol.value_or(1e-8);
  const Circuit modes = circuit_from_json(read_json_file(o.in));
  const CompileResult r = compile_fqt_circuit(modes);
  const bool equivalent = r.residual < tol;
  json report;
  report["n_wires"] = modes.n_wires;
  report["input_gates"] = modes.gates.size();
  report["output_gates"] = r.qubit_circuit.gates.size();
  report["gate_counts"] = r.gate_counts;
  report["residual"] = r.residual;
  report["tolerance"] = tol;
  report["equivalent"] = equivalent;
  if (!o.out.empty()) write_json_file(o.out, circuit_to_json(r.qubit_circuit));
  if (!o.report.empty()) {
    write_json_file(o.report, report);
  } else {
    if (o.out.empty()) report["qubit_circuit"] = circuit_to_json(r.qubit_circuit);
    out << dump(report);
  }
  return equivalent ? kExitOk : kExitCheckFailure;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const int m = o.m > 0 ? o.m : 8;
  if (m > kMaxBkModes) throw InputError("--m must be at most 64");
  if (o.mode == "benchmark") {
    emit(bk_benchmark_csv(m), o.out, out);
    return kExitOk;
  }
  json report;
  report["M"] = m;
  report["depth"] = bk_depth(m);
  if (o.mode == "table") {
    json rows = json::array();
    for (const BkTableRow& r : bk_table(m)) {
      rows.push_back({{"j", r.j}, {"S", r.s}, {"K", r.k}, {"L", r.l}, {"successors", r.successors}});
    }
    report["rows"] = rows;
  } else {
    if (o.j && (*o.j < 0 || *o.j >= m)) throw InputError("--j must lie in [0, M)");
    json circuits = json::array();
    for (int j = 0; j < m; ++j) {
      if (o.j && *o.j != j) continue;
      const ExtractionStageCounts c = extraction_stage_counts(j, m);
      circuits.push_back({{"j", j},
                          {"stage_counts", {{"a", c.a}, {"b", c.b}, {"c", c.c}, {"total", c.total()}}},
                          {"jwt_gates", jwt_extraction_circuit(j, m).gates.size()},
                          {"circuit", circuit_to_json(extraction_circuit(j, m))}});
    }
    report["circuits"] = circuits;
  }
  emit(dump(report), o.out, out);
  return kExitOk;
}

int cmd_trace(const Options& o, std::ostream& out) {
  int n = 0;
  const Matrix rho = load_state(o, n, o.tol.value_or(kDefaultTol));
  if (o.keep.empty()) throw InputError("--keep is required");
  std::vector<int> keep = o.keep;
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) throw InputError("--keep repeats a mode");
  const Matrix marginal = partial_trace(rho, keep, n);
  emit(dump(density_to_json(marginal, static_cast<int>(keep.size()))), o.out, out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermionic quantum theory toolkit"};
  app.require_subcommand(1);
  Options o;

  const auto add_tol = [&](CLI::App* c) {
    c->add_option("--tol", o.tol, "Tolerance override")->check(CLI::PositiveNumber);
  };

  CLI::App* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  verify->add_option("--n", o.n, "Mode count")->check(CLI::PositiveNumber);
  verify->add_option("--m", o.m, "Mode count for the encoding suite")->check(CLI::Range(1, kMaxBkModes));
  verify->add_option("--seed", o.seed, "Seed for randomized checks");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--out", o.out, "Report path (default stdout)");
  add_tol(verify);

  CLI::App* ent = app.add_subcommand("entanglement", "Entanglement report for a state file");
  ent->add_option("--in,--state", o.in, "Density matrix file")->required();
  ent->add_option("--measure", o.measure)->check(CLI::IsMember({"cf", "eof", "separability", "monogamy"}));
  ent->add_option("--out", o.out, "Report path (default stdout)");
  add_tol(ent);

  CLI::App* compile = app.add_subcommand("compile", "Compile a mode circuit to qubits");
  compile->add_option("--in", o.in, "Mode circuit file")->required();
  compile->add_option("--out", o.out, "Qubit circuit path");
  compile->add_option("--report", o.report, "Report path (default stdout)");
  add_tol(compile);

  CLI::App* encode = app.add_subcommand("encode", "Encoding tables, circuits and gate counts");
  encode->add_option("--m", o.m, "Mode count")->check(CLI::Range(1, kMaxBkModes));
  encode->add_option("--mode", o.mode)->check(CLI::IsMember({"table", "circuit", "benchmark"}));
  encode->add_option("--j", o.j, "Only the extraction circuit of this mode");
  encode->add_option("--out", o.out, "Output path (default stdout)");

  CLI::App* trace = app.add_subcommand("trace", "Partial trace of a state file");
  trace->add_option("--in", o.in, "Density matrix file")->required();
  trace->add_option("--keep", o.keep, "Modes to keep, 1-based")->delimiter(',')->required();
  trace->add_option("--out", o.out, "Output path (default stdout)");
  add_tol(trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (ent->parsed()) return cmd_entanglement(o, out);
    if (compile->parsed()) return cmd_compile(o, out);
    if (encode->parsed()) return cmd_encode(o, out);
    if (trace->parsed()) return cmd_trace(o, out);
  } catch (const std::exception& e) {
    const std::string what = e.what();
    if (!what.empty() && what.front() == '{') {
      err << what << "\n";
    } else {
      err << json{{"error", what}}.dump() << "\n";
    }
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fermsim::cli
