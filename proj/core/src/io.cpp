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

#include "fermsim/io.hpp"

#include <fstream>
#include <stdexcept>

#include "fermsim/schema.hpp"

namespace fermsim {

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json real_rows(const Matrix& m, bool imag) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  return json{{"re", real_rows(m, false)}, {"im", real_rows(m, true)}};
}

Matrix matrix_from_json(const json& j) {
  const json& re = j.at("re");
  const json& im = j.at("im");
  const auto rows = re.size();
  if (rows == 0 || im.size() != rows) throw SchemaError("matrix re/im row counts differ or are zero");
  const auto cols = re.at(0).size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (re.at(r).size() != cols || im.at(r).size() != cols) {
      throw SchemaError("matrix rows have unequal lengths");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(re[r][c].get<double>(), im[r][c].get<double>());
    }
  }
  return m;
}

json field_polynomial_to_json(const FieldPolynomial& p, int n) {
  json terms = json::array();
  for (const auto& t : p.terms) {
    json mono = json::array();
    for (const auto& f : t.monomial) mono.push_back({{"mode", f.mode}, {"dagger", f.dagger}});
    terms.push_back({{"coeff", complex_to_json(t.coeff)}, {"monomial", std::move(mono)}});
  }
  json out{{"terms", std::move(terms)}};
  if (n > 0) out["n"] = n;
  return out;
}

FieldPolynomial field_polynomial_from_json(const json& j, int* n) {
  validate_or_throw(j, "field_polynomial");
  FieldPolynomial p;
  for (const auto& t : j.at("terms")) {
    FieldTerm term;
    term.coeff = complex_from_json(t.at("coeff"));
    for (const auto& f : t.at("monomial")) {
      term.monomial.push_back({f.at("mode").get<int>(), f.at("dagger").get<bool>()});
    }
    p.terms.push_back(std::move(term));
  }
  const int declared = j.contains("n") ? j.at("n").get<int>() : p.max_mode();
  if (declared < p.max_mode()) throw SchemaError("field polynomial uses a mode above n");
  if (n) *n = std::max(declared, 1);
  return p;
}

json density_to_json(const Matrix& rho, int n) {
  json out = matrix_to_json(rho);
  out["n"] = n;
  return out;
}

Matrix density_from_json(const json& j, int* n) {
  validate_or_throw(j, "density_matrix");
  const int modes = j.at("n").get<int>();
  Matrix rho = matrix_from_json(j);
  const auto dim = static_cast<Eigen::Index>(fock_dimension(modes));
  if (rho.rows() != dim || rho.cols() != dim) {
    throw SchemaError("density matrix is not 2^n by 2^n");
  }
  if (n) *n = modes;
  return rho;
}

json kraus_map_to_json(const KrausMap& map) {
  json kraus = json::array();
  for (const auto& k : map.kraus) kraus.push_back({{"sign", k.sign}, {"op", matrix_to_json(k.op)}});
  return json{{"n_in", map.n_in}, {"n_out", map.n_out}, {"kraus", std::move(kraus)}};
}

KrausMap kraus_map_from_json(const json& j) {
  validate_or_throw(j, "kraus_map");
  KrausMap map;
  map.n_in = j.at("n_in").get<int>();
  map.n_out = j.at("n_out").get<int>();
  for (const auto& k : j.at("kraus")) {
    map.kraus.push_back({k.at("sign").get<int>(), matrix_from_json(k.at("op"))});
  }
  try {
    map.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return map;
}

json pauli_polynomial_to_json(const PauliPolynomial& p) {
  json terms = json::array();
  for (const auto& [letters, coeff] : p.terms()) {
    terms.push_back({{"coeff", complex_to_json(coeff)}, {"letters", letters}});
  }
  return json{{"n", p.qubits()}, {"terms", std::move(terms)}};
}

PauliPolynomial pauli_polynomial_from_json(const json& j) {
  validate_or_throw(j, "pauli_polynomial");
  const int n = j.at("n").get<int>();
  PauliPolynomial p(n);
  for (const auto& t : j.at("terms")) {
    const auto letters = t.at("letters").get<std::string>();
    if (static_cast<int>(letters.size()) != n) throw SchemaError("letter string length differs from n");
    p.add_term(letters, complex_from_json(t.at("coeff")));
  }
  return p;
}

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates) {
    json gate{{"kind", to_string(g.kind)}, {"wires", g.wires}};
    if (g.kind == GateKind::kPhase || g.kind == GateKind::kCPhase) {
      gate["payload"] = {{"theta", g.theta}};
    } else if (g.kind == GateKind::kCustom) {
      gate["payload"] = matrix_to_json(g.payload);
    }
    gates.push_back(std::move(gate));
  }
  json out{{"wire_type", to_string(c.wire_type)}, {"n_wires", c.n_wires}, {"gates", std::move(gates)}};
  if (c.global_phase != 0.0) out["global_phase"] = c.global_phase;
  return out;
}

Circuit circuit_from_json(const json& j) {
  validate_or_throw(j, "circuit");
  Circuit c;
  c.wire_type = wire_type_from_string(j.at("wire_type").get<std::string>());
  c.n_wires = j.at("n_wires").get<int>();
  c.global_phase = j.value("global_phase", 0.0);
  for (const auto& g : j.at("gates")) {
    Gate gate;
    gate.kind = gate_kind_from_string(g.at("kind").get<std::string>());
    gate.wires = g.at("wires").get<std::vector<int>>();
    if (g.contains("payload")) {
      const json& p = g.at("payload");
      gate.theta = p.value("theta", 0.0);
      if (p.contains("re") || p.contains("im")) gate.payload = matrix_from_json(p);
    }
    if ((gate.kind == GateKind::kPhase || gate.kind == GateKind::kCPhase) &&
        !(g.contains("payload") && g.at("payload").contains("theta"))) {
      throw SchemaError(g.at("kind").get<std::string>() + " gate needs payload.theta");
    }
    c.gates.push_back(std::move(gate));
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return c;
}

json locc_protocol_to_json(const LoccProtocol& p) {
  json rounds = json::array();
  for (const auto& r : p.rounds) {
    json branches = json::array();
    for (const auto& instrument : r.branches) {
      json maps = json::array();
      for (const auto& m : instrument) maps.push_back(kraus_map_to_json(m));
      branches.push_back(std::move(maps));
    }
    rounds.push_back({{"party", r.party}, {"branches", std::move(branches)}});
  }
  return json{{"party_modes", p.party_modes}, {"rounds", std::move(rounds)}};
}

LoccProtocol locc_protocol_from_json(const json& j) {
  validate_or_throw(j, "locc_protocol");
  LoccProtocol p;
  p.party_modes = j.at("party_modes").get<std::vector<int>>();
  for (const auto& r : j.at("rounds")) {
    LoccRound round;
    round.party = r.at("party").get<int>();
    for (const auto& instrument : r.at("branches")) {
      std::vector<KrausMap> maps;
      for (const auto& m : instrument) maps.push_back(kraus_map_from_json(m));
      round.branches.push_back(std::move(maps));
    }
    p.rounds.push_back(std::move(round));
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return p;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace fermsim
