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

#include <string>
#include <vector>

#include "fermsim/circuit.hpp"
#include "fermsim/types.hpp"

namespace fermsim {

// I - n_j - n_{j+1} + phi_{j+1}^dag phi_j + phi_j^dag phi_{j+1} on n modes,
// with 1-based j.
Matrix fswap(int j, int n);
// Diagonal (-1)^{s_j s_{j+1}} and the qubit swap of j, j+1 on n qubits.
Matrix swap_defect(int j, int n);
Matrix qswap(int j, int n);

struct RoutedGate {
  Circuit mode_circuit;   // fswap chain around the adjacent gate
  Circuit qubit_circuit;  // its Jordan-Wigner image
};

// Realizes a two-mode gate on modes j < k (1-based) from its adjacent copy on
// (j, j+1) by conjugating with fswaps. local is given in field order (j, k).
RoutedGate route_nearest_neighbor(const Matrix& local, int j, int k, int n);

// V_m: |s_1 ... s_m> -> |s_1 xor ... xor s_m, s_2 ... s_m>.
Matrix parity_embedding(int m);
// V_m (I (x) G) V_m for G acting on m - 1 qubits.
Matrix parity_preserving_extension(const Matrix& g);

struct UniversalGate {
  std::string name;
  int arity = 1;
  Matrix matrix;
};

std::vector<UniversalGate> universal_set(WireType wire_type);

struct UniversalSetResiduals {
  double lambda_phase = 0.0;     // Lambda(e^{i pi/4}) = exp(i pi/4 n_0)
  double lambda_z = 0.0;         // Lambda(sigma^z) = exp(i pi n_0 n_1)
  double g_exponential = 0.0;    // G-hat equals its field exponential
  double g_split = 0.0;          // exponential splits into hopping and pairing
  double h_from_g = 0.0;         // H-hat = (I (x) Lambda(-i)) G-hat (I (x) Lambda(-i))
  double h_extension = 0.0;      // H-hat = V_2 (I (x) H) V_2
  double max() const;
};

UniversalSetResiduals universal_set_identities();

// Z on m + 1 qubits, as a permutation matrix.
Matrix z_permutation(int m);
// Circuit of Lambda(sigma-hat^x)(j, 0, m) gates realizing Z. With expand set,
// each one is written as H-hat Lambda(sigma^z) H-hat.
Circuit synthesize_Z(int m, bool expand = false);

struct KCorrector {
  double residual = 0.0;  // |Z^-1 P^-1 (Lambda(H-hat) (x) I) P Z - K (x) I|
  Matrix k;               // V^-1 (Lambda(H) (x) I) V on m qubits
  Matrix w0;              // even-sector block of K
  Matrix w1;              // odd-sector block of K
};

KCorrector k_corrector_identity(int m);

struct CompileResult {
  Circuit qubit_circuit;
  double residual = 0.0;  // max |U_qubits - J(U_modes)|
  std::map<std::string, int> gate_counts;
};

// Compiles a mode circuit to a qubit circuit over parity-preserving gates
// plus X. Arbitrary angles are emitted as phase and cphase gates; angles
// that are multiples of pi/4 become Lambda(e^{i pi/4}) powers and
// Lambda(sigma^z).
CompileResult compile_fqt_circuit(const Circuit& modes);

// Gate list realizing a parity-preserving two-qubit unitary on wires (a, b),
// with the global phase returned separately.
std::vector<Gate> synthesize_parity_preserving(const Matrix& u, int a, int b,
                                               double& global_phase);

}  // namespace fermsim
