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
#include <vector>

#include "fermsim/types.hpp"

namespace fermsim {

struct KrausTerm {
  int sign = 1;  // +1 or -1
  Matrix op;
};

// Signed Kraus decomposition rho -> sum_i sign_i K_i rho K_i^dag. Operators map
// 2^n_in to 2^n_out dimensional Fock spaces.
struct KrausMap {
  int n_in = 1;
  int n_out = 1;
  std::vector<KrausTerm> kraus;

  void validate() const;
};

Matrix apply_channel(const KrausMap& map, const Matrix& rho);
// max |sum_i sign_i K_i^dag K_i - I|
double determinism_residual(const KrausMap& map);

struct EvenOddParts {
  Matrix even;
  Matrix odd;
};

// Splits K into (K + P K P)/2 and (K - P K P)/2 with P the +-1 parity.
EvenOddParts split_even_odd(const Matrix& k, int n_in, int n_out);
// 0 for even, 1 for odd, -1 for mixed parity (within tol).
int operator_parity(const Matrix& k, int n_in, int n_out, double tol = 1e-12);

// Replaces every Kraus operator by its even and odd parts, dropping parts
// whose entries all vanish.
KrausMap canonicalize(const KrausMap& map);

// The same Kraus expression, in field operators, on a system with extra
// modes. The ancilla block goes before or after the original modes.
KrausMap extend_with_ancilla(const KrausMap& map, int ancilla_modes,
                             bool ancilla_first);

// Exponent of the reordering sign when the factors of the traced modes are
// moved to the left of the kept ones: sum over traced k of (s_k xor t_k)
// times the number of kept i < k with s_i != t_i.
int reorder_exponent(std::size_t s, std::size_t t, std::span<const int> keep,
                     int n);

// Fermionic partial trace via the discarding rule on the field expansion.
// keep lists 1-based modes; the result is ordered by ascending mode.
Matrix partial_trace(const Matrix& rho, std::span<const int> keep, int n);

// Marginal determined only by Tr[sigma a] = Tr[rho a_embedded] over a
// spanning set of effects on the kept modes.
Matrix marginal_oracle(const Matrix& rho, std::span<const int> keep, int n);

struct Dilation {
  int system_modes = 0;
  int ancilla_modes = 0;
  int even_count = 0;
  int odd_count = 0;
  Matrix single_kraus;   // on system_modes + ancilla_modes, ancilla last
  Matrix ancilla_state;  // vacuum projector of the ancilla
};

Dilation dilate(const KrausMap& map);
// rho -> Tr_anc[T (rho (x) |vac><vac|) T^dag]
Matrix apply_dilation(const Dilation& dilation, const Matrix& rho);

}  // namespace fermsim
