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

#include "fermsim/channels.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/random.hpp"
#include "fermsim/superselection.hpp"
#include "fermsim/types.hpp"

namespace fermsim::verify {

// Per-task generator so results do not depend on scheduling.
Rng task_rng(std::uint64_t seed, std::uint64_t stream);

std::string str(const Count& c);
std::string label(const std::string& base, const std::vector<int>& values);

std::vector<std::vector<int>> nonempty_subsets(int n);

// Deterministic map with the given numbers of even and odd Kraus operators.
KrausMap random_fqt_channel(int n, int evens, int odds, Rng& rng);
// Unitary on k modes with definite parity.
Matrix random_parity_unitary(int k, int parity, Rng& rng);

FieldPolynomial random_polynomial(int n, int terms, int max_len, Rng& rng);
FieldPolynomial multiply(const FieldPolynomial& a, const FieldPolynomial& b);
FieldPolynomial adjoint(const FieldPolynomial& a);

Vector ket(const std::vector<std::pair<std::string, Complex>>& terms);
Matrix projector(const Vector& v);
// Even/odd mixture of the two maximally entangled two-mode states.
Matrix phi_state();
// (|000> + |110> + |011> + |101>) / 2.
Matrix phi_prime_state();

}  // namespace fermsim::verify
