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
#include <span>
#include <string>
#include <vector>

#include "fermsim/fock_core.hpp"
#include "fermsim/types.hpp"

namespace fermsim {

// Letters I, X, Y, Z, '+' and '-'. '-' is the lowering matrix |0><1| used for
// annihilators and '+' its adjoint |1><0|.
struct LetterOrder {
  bool operator()(const std::string& a, const std::string& b) const;
};

class PauliPolynomial {
 public:
  static constexpr double kDropTol = 1e-14;

  explicit PauliPolynomial(int n);
  static PauliPolynomial identity(int n);
  static PauliPolynomial single(int n, const std::string& letters,
                                Complex coeff = 1.0);

  int qubits() const { return n_; }
  const std::map<std::string, Complex, LetterOrder>& terms() const {
    return terms_;
  }

  void add_term(const std::string& letters, Complex coeff);
  PauliPolynomial operator+(const PauliPolynomial& other) const;
  PauliPolynomial operator-(const PauliPolynomial& other) const;
  PauliPolynomial operator*(const PauliPolynomial& other) const;
  PauliPolynomial operator*(Complex scalar) const;
  PauliPolynomial adjoint() const;

  SparseMatrix to_sparse() const;
  Matrix to_dense() const;

 private:
  void prune();

  int n_;
  std::map<std::string, Complex, LetterOrder> terms_;
};

// Base-6 key of a letter string, I=0 X=1 Y=2 Z=3 +=4 -=5, first letter most
// significant.
std::uint64_t letter_key(const std::string& letters);
Matrix letter_matrix(char letter);

// ordering is the permutation pi as a list of 1-based positions, pi(i) =
// ordering[i-1]. An empty span means the identity ordering.
PauliPolynomial jwt_annihilator(int i, std::span<const int> ordering, int n);
PauliPolynomial jwt_polynomial(const FieldPolynomial& p, int n,
                               std::span<const int> ordering = {});

// Qubit permutation matrix sending qubit k to qubit ordering[k-1].
Matrix ordering_permutation(std::span<const int> ordering, int n);

struct SigmaIdentityResiduals {
  double x = 0.0;          // sigma^x_i = Z..Z J(phi + phi^dag)
  double y = 0.0;          // sigma^y_i = -i Z..Z J(phi - phi^dag)
  double z_literal = 0.0;  // sigma^z_i = J(phi^dag phi - phi phi^dag)
  double z_parity = 0.0;   // sigma^z_i = J(phi phi^dag - phi^dag phi)
};

SigmaIdentityResiduals pauli_from_fields_identities(int n);

}  // namespace fermsim
