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

#include "fermsim/circuit.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fermsim/fock_core.hpp"
#include "fermsim/linalg.hpp"

namespace fermsim {

namespace {

struct KindName {
  GateKind kind;
  const char* name;
  int arity;  // 0 means taken from the payload
};

constexpr std::array<KindName, 13> kKinds = {{
    {GateKind::kLambdaPhase, "lambda_phase", 1},
    {GateKind::kLambdaZ, "lambda_z", 2},
    {GateKind::kHHat, "h_hat", 2},
    {GateKind::kGHat, "g_hat", 2},
    {GateKind::kFSwap, "fswap", 2},
    {GateKind::kQSwap, "qswap", 2},
    {GateKind::kSwapDefect, "swap_defect", 2},
    {GateKind::kX, "x", 1},
    {GateKind::kLambdaXHat, "lambda_x_hat", 3},
    {GateKind::kPhase, "phase", 1},
    {GateKind::kCPhase, "cphase", 2},
    {GateKind::kCNot, "cnot", 2},
    {GateKind::kCustom, "custom", 0},
}};

const KindName& lookup(GateKind kind) {
  for (const KindName& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw std::invalid_argument("unknown gate kind");
}

Matrix diag(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index k = 0;
  for (Complex c : entries) v(k++) = c;
  return v.asDiagonal();
}

Matrix hadamard_hat() {
  const double r = 1.0 / std::numbers::sqrt2;
  Matrix m(4, 4);
  m << r, 0, 0, r,
       0, -r, r, 0,
       0, r, r, 0,
       r, 0, 0, -r;
  return m;
}

Matrix g_hat() {
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, r);
  Matrix m(4, 4);
  m << r, 0, 0, i,
       0, r, i, 0,
       0, i, r, 0,
       i, 0, 0, r;
  return m;
}

}  // namespace

std::string to_string(GateKind kind) { return lookup(kind).name; }

GateKind gate_kind_from_string(const std::string& name) {
  for (const KindName& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

std::string to_string(WireType type) {
  return type == WireType::kQubit ? "qubit" : "mode";
}

WireType wire_type_from_string(const std::string& name) {
  if (name == "qubit") return WireType::kQubit;
  if (name == "mode") return WireType::kMode;
  throw std::invalid_argument("unknown wire type '" + name + "'");
}

int gate_arity(GateKind kind) { return lookup(kind).arity; }

Matrix gate_matrix(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::kLambdaPhase:
      return diag({1.0, std::polar(1.0, std::numbers::pi / 4)});
    case GateKind::kLambdaZ:
    case GateKind::kSwapDefect:
      return diag({1.0, 1.0, 1.0, -1.0});
    case GateKind::kHHat:
      return hadamard_hat();
    case GateKind::kGHat:
      return g_hat();
    case GateKind::kFSwap: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = 1.0;
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      m(3, 3) = -1.0;
      return m;
    }
    case GateKind::kQSwap: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = 1.0;
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      m(3, 3) = 1.0;
      return m;
    }
    case GateKind::kX: {
      Matrix m = Matrix::Zero(2, 2);
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      return m;
    }
    case GateKind::kLambdaXHat: {
      Matrix m = Matrix::Zero(8, 8);
      for (int x = 0; x < 4; ++x) m(x, x) = 1.0;
      for (int x = 4; x < 8; ++x) m(x ^ 3, x) = 1.0;
      return m;
    }
    case GateKind::kPhase:
      return diag({1.0, std::polar(1.0, gate.theta)});
    case GateKind::kCPhase:
      return diag({1.0, 1.0, 1.0, std::polar(1.0, gate.theta)});
    case GateKind::kCNot: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      m(2, 3) = 1.0;
      m(3, 2) = 1.0;
      return m;
    }
    case GateKind::kCustom:
      return gate.payload;
  }
  throw std::invalid_argument("unknown gate kind");
}

void Circuit::validate() const {
  if (n_wires < 1 || n_wires > 16) throw std::invalid_argument("n_wires outside 1..16");
  for (const Gate& g : gates) {
    const int arity = gate_arity(g.kind);
    const auto k = static_cast<int>(g.wires.size());
    if (arity > 0 && k != arity) {
      throw std::invalid_argument(to_string(g.kind) + " expects " +
                                  std::to_string(arity) + " wires");
    }
    if (g.kind == GateKind::kCustom) {
      if (k < 1 || g.payload.rows() != (Eigen::Index{1} << k) ||
          g.payload.cols() != g.payload.rows()) {
        throw std::invalid_argument("custom payload does not match its wires");
      }
    }
    for (std::size_t a = 0; a < g.wires.size(); ++a) {
      if (g.wires[a] < 0 || g.wires[a] >= n_wires) {
        throw std::invalid_argument("gate wire out of range");
      }
      for (std::size_t b = a + 1; b < g.wires.size(); ++b) {
        if (g.wires[a] == g.wires[b]) throw std::invalid_argument("gate repeats a wire");
      }
    }
  }
}

std::map<std::string, int> Circuit::gate_counts() const {
  std::map<std::string, int> counts;
  for (const Gate& g : gates) ++counts[to_string(g.kind)];
  return counts;
}

Matrix circuit_unitary(const Circuit& circuit) {
  circuit.validate();
  const int n = circuit.n_wires;
  if (n > kMaxDenseModes) throw std::length_error("dense unitary limited to 10 wires");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : circuit.gates) {
    const Matrix local = gate_matrix(g);
    if (circuit.wire_type == WireType::kQubit) {
      apply_qubit_operator(u, local, g.wires, n);
    } else {
      std::vector<int> modes;
      for (int w : g.wires) modes.push_back(w + 1);
      u = embed_field_operator_sparse(local, modes, n) * u;
    }
  }
  return std::polar(1.0, circuit.global_phase) * u;
}

Gate make_gate(GateKind kind, std::vector<int> wires, double theta) {
  Gate g;
  g.kind = kind;
  g.wires = std::move(wires);
  g.theta = theta;
  return g;
}

Gate make_custom(std::vector<int> wires, Matrix payload) {
  Gate g;
  g.kind = GateKind::kCustom;
  g.wires = std::move(wires);
  g.payload = std::move(payload);
  return g;
}

}  // namespace fermsim
