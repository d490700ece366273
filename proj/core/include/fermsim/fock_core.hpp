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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fermsim/types.hpp"

namespace fermsim {

// Operator on the Fock space of n local fermionic modes, stored sparse. The
// dense view is available for n <= kMaxDenseModes.
class FockOperator {
 public:
  FockOperator(int n, SparseMatrix matrix);

  int modes() const { return n_; }
  const SparseMatrix& sparse() const { return matrix_; }
  Matrix dense() const;

  FockOperator adjoint() const;
  FockOperator operator*(const FockOperator& other) const;
  FockOperator operator+(const FockOperator& other) const;
  FockOperator operator-(const FockOperator& other) const;
  FockOperator operator*(Complex scalar) const;

 private:
  int n_;
  SparseMatrix matrix_;
};

void check_mode_count(int n);
std::size_t fock_dimension(int n);

std::size_t basis_index(const Occupation& s);
Occupation occupation_of(std::size_t index, int n);
std::string to_string(const Occupation& s);
Occupation parse_occupation(std::string_view text);

// Mode indices are 1-based throughout the field-level API.
FockOperator identity_operator(int n);
FockOperator annihilator(int i, int n);
FockOperator creator(int i, int n);
FockOperator number_operator(int i, int n);
FockOperator vacuum_projector(int n);
Vector fock_vector(const Occupation& s);

// Projector onto even occupation number, 1/2 (I + prod(phi phi^dag - phi^dag phi)).
FockOperator parity_operator(int n);
// The +-1 parity prod(phi phi^dag - phi^dag phi).
FockOperator parity_sign_operator(int n);
int parity_of(const Occupation& s);
int parity_of_index(std::size_t index);

struct FieldFactor {
  int mode = 1;
  bool dagger = false;
};

struct FieldTerm {
  Complex coeff{1.0, 0.0};
  std::vector<FieldFactor> monomial;
};

struct FieldPolynomial {
  std::vector<FieldTerm> terms;

  int max_mode() const;
};

FockOperator evaluate_polynomial(const FieldPolynomial& p, int n);

struct CarResiduals {
  double anticommutator = 0.0;  // max |{phi_i, phi_j}|
  double car = 0.0;             // max |{phi_i, phi_j^dag} - delta_ij I|
  double max() const { return anticommutator > car ? anticommutator : car; }
};

CarResiduals verify_car(int n);

// Sign s with |s><t| = s * prod_i phi_i^{dag s_i} phi_i phi_i^dag phi_i^{t_i}.
int field_product_sign(std::size_t s, std::size_t t, int n);

// Image of an operator on k local modes under the field-algebra embedding
// that sends local mode i to global mode modes[i]. The local operator is
// expanded in ordered field monomials of the local modes and each monomial is
// re-evaluated on the global modes.
Matrix embed_field_operator(const Matrix& local, std::span<const int> modes,
                            int n);
SparseMatrix embed_field_operator_sparse(const Matrix& local,
                                         std::span<const int> modes, int n);

}  // namespace fermsim
