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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "fermsim/types.hpp"

namespace fermsim {

enum class WireType { kQubit, kMode };

enum class GateKind {
  kLambdaPhase,  // diag(1, e^{i pi/4})
  kLambdaZ,      // controlled sigma^z
  kHHat,         // parity-preserving extension of the Hadamard
  kGHat,         // parity-preserving extension of [[1, i], [i, 1]] / sqrt(2)
  kFSwap,        // fermionic swap of two modes
  kQSwap,        // qubit swap
  kSwapDefect,   // diagonal (-1)^{s_a s_b}
  kX,            // sigma^x, or phi + phi^dag on mode wires
  kLambdaXHat,   // wire 0 flips wires 1 and 2
  kPhase,        // diag(1, e^{i theta})
  kCPhase,       // diag(1, 1, 1, e^{i theta})
  kCNot,         // wire 0 controls wire 1
  kCustom,       // explicit matrix payload
};

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);
std::string to_string(WireType type);
WireType wire_type_from_string(const std::string& name);

struct Gate {
  GateKind kind = GateKind::kCustom;
  std::vector<int> wires;  // 0-based
  double theta = 0.0;      // kPhase, kCPhase
  Matrix payload;          // kCustom
};

struct Circuit {
  WireType wire_type = WireType::kQubit;
  int n_wires = 1;
  std::vector<Gate> gates;
  double global_phase = 0.0;

  void validate() const;
  std::map<std::string, int> gate_counts() const;
};

// Local matrix of a gate in the order of its wires. On mode wires this is the
// field-level operator expressed in the Jordan-Wigner basis of those modes.
Matrix gate_matrix(const Gate& gate);
int gate_arity(GateKind kind);

// Full unitary of a circuit. Qubit circuits embed gates as tensor factors;
// mode circuits embed them through the field algebra, which adds parity
// strings for odd gates and fermionic signs for non-adjacent wires.
Matrix circuit_unitary(const Circuit& circuit);

Gate make_gate(GateKind kind, std::vector<int> wires, double theta = 0.0);
Gate make_custom(std::vector<int> wires, Matrix payload);

}  // namespace fermsim
