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

#include <cstdint>
#include <string>
#include <vector>

#include "fermsim/circuit.hpp"
#include "fermsim/types.hpp"

namespace fermsim {

inline constexpr int kMaxBkModes = 64;

// Bits per index, ceil(log2 M), with M = 1 treated as one bit.
int bk_depth(int m);

// alpha precedes beta when beta agrees with alpha from some bit l0 upwards and
// is all ones below l0. Bits are counted from the least significant one.
bool preceq(std::uint64_t alpha, std::uint64_t beta, int t);

// Index sets for mode j (0-based) among M modes.
std::vector<int> bk_set_S(int j, int m);           // k <= j in the order
std::vector<int> bk_successors(int j, int m);      // i with j <= i
std::vector<int> bk_set_K(int j, int m);           // s_j = x_j xor x_K
std::vector<int> bk_set_L(int j, int m);           // prefix parity = x_L

// Occupations and encoded registers as bit masks, bit j for mode j.
std::uint64_t bk_encode(std::uint64_t s, int m);
std::uint64_t bk_decode(std::uint64_t x, int m);

struct BkTableRow {
  int j = 0;
  std::vector<int> s, k, l, successors;
};

std::vector<BkTableRow> bk_table(int m);

// Extraction of mode j: ancilla on wire `ancilla`, register index i on wire
// offset + i.
Circuit extraction_circuit(int j, int m, int ancilla = 0, int offset = 1);
Circuit jwt_extraction_circuit(int j, int m, int ancilla = 0, int offset = 1);

struct ExtractionStageCounts {
  int a = 0;
  int b = 0;
  int c = 0;
  int total() const { return a + b + c; }
};

ExtractionStageCounts extraction_stage_counts(int j, int m);
int max_extraction_gates_bk(int m);
int max_extraction_gates_jwt(int m);
std::string bk_benchmark_csv(int m_max);

// Permutation |s> -> |x(s)> on M qubits, mode i on wire i.
Matrix bk_encoding_unitary(int m);

// Qubit circuit on ancillas 0..k-1 and the register at offset k that applies
// a one- or two-mode gate to BK-encoded modes through extraction.
Circuit simulate_mode_gate_on_qubits(const Gate& mode_gate, int m);

// |s> -> |s_0 s_0 s_1 s_1 ...> and the mode circuit that acts on its image
// like the qubit circuit.
Matrix pair_isometry(int n_qubits);
Circuit qubit_to_fermion_embed(const Circuit& qubits);

}  // namespace fermsim
