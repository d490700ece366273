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

double max_abs(const Matrix& m);
double max_abs(const SparseMatrix& m);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(std::span<const Matrix> factors);

double hermiticity_residual(const Matrix& m);
double unitarity_residual(const Matrix& u);
double commutator_residual(const Matrix& a, const Matrix& b);

// Eigenvalues of the Hermitian part, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);
// exp(i t H) for Hermitian H.
Matrix expi_hermitian(const Matrix& h, double t);
// Square root of a positive semidefinite matrix; small negative eigenvalues
// are clamped to zero.
Matrix sqrt_psd(const Matrix& m);

// Smallest max-norm distance between a and exp(i phi) b over phi, together
// with the phase that attains it (aligned on the largest entry of b).
struct PhaseAlignment {
  double residual = 0.0;
  double phase = 0.0;
};
PhaseAlignment align_global_phase(const Matrix& a, const Matrix& b);

// Partial transpose of a 4x4 two-qubit matrix on the second factor.
Matrix partial_transpose_second(const Matrix& m);

// Permutation matrix with P e_x = e_{image[x]}.
Matrix permutation_matrix(std::span<const std::size_t> image);

// Full-register matrix of a gate acting on the listed qubit wires. Wire 0 is
// the most significant bit.
Matrix embed_qubit_operator(const Matrix& local, std::span<const int> wires,
                            int n);
// Left-multiplies the columns of u by the gate acting on the listed wires.
void apply_qubit_operator(Matrix& u, const Matrix& local,
                          std::span<const int> wires, int n);

// Real rank of a family of Hermitian matrices viewed as real vectors.
int real_span_rank(std::span<const Matrix> family, double tol = 1e-9);

}  // namespace fermsim
