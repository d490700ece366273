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

#include "fermsim/channels.hpp"
#include "fermsim/types.hpp"

namespace fermsim {

// Two-qubit Wootters concurrence of a 4x4 density matrix (normalized first).
double wootters_concurrence(const Matrix& rho, double tol = kDefaultTol);
// Entanglement of formation as a function of concurrence.
double eof_from_concurrence(double c);
double binary_entropy(double x);

struct SectorMeasure {
  double p0 = 0.0;
  double p1 = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;
  double value = 0.0;
};

// Sector-weighted concurrence of a two-mode state.
SectorMeasure fermionic_concurrence(const Matrix& rho, double tol = kDefaultTol);
// Sector-weighted entanglement of formation, a lower bound on the fermionic one.
SectorMeasure fermionic_eof_lower(const Matrix& rho, double tol = kDefaultTol);

struct SeparabilityResult {
  bool separable = false;
  double witness = 0.0;  // largest violating magnitude
  std::string detail;
};

// Full separability into single-mode parties: diagonal in the Fock basis.
SeparabilityResult full_separability_test(const Matrix& rho, int n,
                                          double tol = kDefaultTol);
// Two-mode bipartition: commutes with both local parities and every sector
// block passes the partial transpose test.
SeparabilityResult bipartite_sector_separability(const Matrix& rho,
                                                 double tol = kDefaultTol);

enum class MesClass { kNone, kEven, kOdd };
std::string to_string(MesClass c);

// Classifies a pure two-mode state; coefficients below floor count as zero.
MesClass mes_membership(const Vector& psi, double floor = 1e-9);
MesClass mes_membership(const Matrix& rho, double floor = 1e-9);

struct MonogamyResult {
  double c_ab = 0.0;
  double c_ac = 0.0;
  double sum_of_squares = 0.0;
  bool exceeds_ckw = false;  // sum_of_squares > 1
};

// Concurrences of the (1,2) and (1,3) marginals of a three-mode state.
MonogamyResult monogamy_witness(const Matrix& rho, double tol = kDefaultTol);

// A party acts on a contiguous block of modes. A round lets one party apply
// an instrument chosen by the outcome of the previous round; branches[k] is
// the instrument used after outcome k (a single branch means unconditional).
struct LoccRound {
  int party = 0;
  std::vector<std::vector<KrausMap>> branches;
};

struct LoccProtocol {
  std::vector<int> party_modes;
  std::vector<LoccRound> rounds;

  int total_modes() const;
  int first_mode(int party) const;  // 1-based
  void validate() const;
};

// Qubit operation for one fermionic outcome and one parity bit.
struct QubitKrausOp {
  int parity_bit = 0;
  Matrix local;  // acts on the party's qubits
};

struct QubitRound {
  int party = 0;
  int first_wire = 0;  // 0-based
  int wires = 0;
  int parity_bits = 1;                  // classical bits added per round
  std::vector<int> correction_wires;    // qubits that apply Z on parity 1
  // branches[k][outcome] lists the operations of that outcome.
  std::vector<std::vector<std::vector<QubitKrausOp>>> branches;
};

struct QubitProtocol {
  int n_qubits = 0;
  std::vector<QubitRound> rounds;

  int classical_bits() const;
};

QubitProtocol locc_translate(const LoccProtocol& protocol);
Matrix apply_fermionic_protocol(const LoccProtocol& protocol, const Matrix& rho);
Matrix apply_qubit_protocol(const QubitProtocol& protocol, const Matrix& rho);

}  // namespace fermsim
