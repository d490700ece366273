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

#include <gtest/gtest.h>

#include <cmath>

#include "fermsim/channels.hpp"
#include "fermsim/circuit.hpp"
#include "fermsim/compiler.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/linalg.hpp"
#include "test_util.hpp"

namespace fermsim {
namespace {

Matrix hadamard() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

Matrix controlled(const Matrix& u) {
  const Eigen::Index d = u.rows();
  Matrix c = Matrix::Identity(2 * d, 2 * d);
  c.bottomRightCorner(d, d) = u;
  return c;
}

Matrix swap_first_two(int qubits) {
  std::vector<std::size_t> image(std::size_t{1} << qubits);
  for (std::size_t x = 0; x < image.size(); ++x) {
    const std::size_t hi = (x >> (qubits - 1)) & 1u, next = (x >> (qubits - 2)) & 1u;
    std::size_t y = x & ~((std::size_t{3}) << (qubits - 2));
    image[x] = y | (next << (qubits - 1)) | (hi << (qubits - 2));
  }
  return permutation_matrix(image);
}

Matrix qubit_parity(int n) {
  std::vector<Matrix> zs(static_cast<std::size_t>(n), testing::sigma_z());
  return kron_all(zs);
}

Matrix random_parity_unitary(int k, int parity, Rng& rng) {
  // Block unitary with the sector structure, times a flip for odd gates.
  const Eigen::Index d = Eigen::Index{1} << k;
  const Matrix u = random_unitary(d, rng);
  const Matrix p = parity_sign_operator(k).dense();
  Matrix even = (u + p * u * p) / 2.0;
  // Polar projection back to the unitary group.
  Eigen::JacobiSVD<Matrix> svd(even, Eigen::ComputeFullU | Eigen::ComputeFullV);
  even = svd.matrixU() * svd.matrixV().adjoint();
  if (parity == 0) return even;
  return (annihilator(1, k) + creator(1, k)).dense() * even;
}

TEST(Circuit, GateMatricesAreUnitaryWithDeclaredParity) {
  for (GateKind kind : {GateKind::kLambdaPhase, GateKind::kLambdaZ, GateKind::kHHat, GateKind::kGHat,
                        GateKind::kFSwap, GateKind::kSwapDefect, GateKind::kX, GateKind::kLambdaXHat,
                        GateKind::kPhase, GateKind::kCPhase}) {
    const int k = gate_arity(kind);
    std::vector<int> wires(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) wires[i] = i;
    const Matrix m = gate_matrix(make_gate(kind, wires, 0.3));
    EXPECT_LT(unitarity_residual(m), 1e-14) << to_string(kind);
    const int expected = kind == GateKind::kX ? 1 : 0;
    EXPECT_EQ(operator_parity(m, k, k), expected) << to_string(kind);
    EXPECT_EQ(gate_kind_from_string(to_string(kind)), kind);
  }
  EXPECT_THROW(gate_kind_from_string("toffoli"), std::invalid_argument);
}

TEST(Circuit, ValidationErrors) {
  Circuit c;
  c.n_wires = 2;
  c.gates.push_back(make_gate(GateKind::kCNot, {0, 2}));
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.gates = {make_gate(GateKind::kCNot, {1, 1})};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.gates = {make_gate(GateKind::kCNot, {1})};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.gates = {make_custom({0, 1}, Matrix::Identity(2, 2))};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.n_wires = 17;
  c.gates.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Circuit, ModeWiresUseFieldEmbedding) {
  Circuit c;
  c.wire_type = WireType::kMode;
  c.n_wires = 3;
  c.gates.push_back(make_gate(GateKind::kX, {2}));
  const Matrix expected = (annihilator(3, 3) + creator(3, 3)).dense();
  EXPECT_LT(max_abs(circuit_unitary(c) - expected), 1e-14);
  c.wire_type = WireType::kQubit;
  EXPECT_LT(max_abs(circuit_unitary(c) - kron(Matrix::Identity(4, 4), pauli_x())), 1e-14);
}

TEST(Compiler, FswapIsQswapTimesDefect) {
  for (int n = 2; n <= 6; ++n) {
    for (int j = 1; j < n; ++j) {
      EXPECT_LT(max_abs(fswap(j, n) - qswap(j, n) * swap_defect(j, n)), 1e-14);
      EXPECT_LT(max_abs(qswap(j, n) * swap_defect(j, n) - swap_defect(j, n) * qswap(j, n)), 1e-14);
    }
  }
}

TEST(Compiler, RoutingMatchesDirectEmbedding) {
  Rng rng(testing::kSeed);
  for (int n = 2; n <= 6; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int parity : {0, 1}) {
          const Matrix local = random_parity_unitary(2, parity, rng);
          const std::vector<int> modes = {j, k};
          const Matrix direct = embed_field_operator(local, modes, n);
          const RoutedGate r = route_nearest_neighbor(local, j, k, n);
          EXPECT_LT(max_abs(circuit_unitary(r.mode_circuit) - direct), 1e-10)
              << n << " " << j << " " << k;
          EXPECT_LT(max_abs(circuit_unitary(r.qubit_circuit) - direct), 1e-10)
              << n << " " << j << " " << k;
        }
      }
    }
  }
}

TEST(Compiler, UniversalSetIdentities) {
  const UniversalSetResiduals r = universal_set_identities();
  EXPECT_LT(r.lambda_phase, 1e-10);
  EXPECT_LT(r.lambda_z, 1e-10);
  EXPECT_LT(r.g_exponential, 1e-10);
  EXPECT_LT(r.g_split, 1e-10);
  EXPECT_LT(r.h_from_g, 1e-10);
  EXPECT_LT(r.h_extension, 1e-10);
}

TEST(Compiler, GHatIsExtensionOfNormalizedG) {
  Matrix g(2, 2);
  g << 1, Complex(0, 1), Complex(0, 1), 1;
  const Matrix expected = parity_preserving_extension(g / std::sqrt(2.0));
  EXPECT_LT(max_abs(gate_matrix(make_gate(GateKind::kGHat, {0, 1})) - expected), 1e-14);
}

TEST(Compiler, ParityEmbeddingFacts) {
  Rng rng(testing::kSeed + 1);
  for (int m = 2; m <= 4; ++m) {
    const Matrix v = parity_embedding(m);
    const Eigen::Index rest = Eigen::Index{1} << (m - 1);
    EXPECT_LT(max_abs(v * v - Matrix::Identity(2 * rest, 2 * rest)), 1e-15);
    const Matrix x_first = kron(pauli_x(), Matrix::Identity(rest, rest));
    EXPECT_LT(max_abs(v * x_first * v - x_first), 1e-15);
    const Matrix a = random_unitary(rest, rng);
    const Matrix b = random_unitary(rest, rng);
    const Matrix ea = parity_preserving_extension(a);
    EXPECT_LT(max_abs(ea * parity_preserving_extension(b) - parity_preserving_extension(a * b)), 1e-12);
    EXPECT_LT(commutator_residual(ea, qubit_parity(m)), 1e-12);
  }
}

TEST(Compiler, SwapWithParityIdentity) {
  const Matrix s = swap_first_two(3);
  for (const Matrix& x : {pauli_x(), hadamard()}) {
    const Matrix lhs = parity_preserving_extension(controlled(x));
    const Matrix rhs = s * controlled(parity_preserving_extension(x)) * s;
    EXPECT_LT(max_abs(lhs - rhs), 1e-12);
  }
}

TEST(Compiler, ZSynthesis) {
  for (int m = 1; m <= 5; ++m) {
    const Matrix z = z_permutation(m);
    EXPECT_LT(max_abs(circuit_unitary(synthesize_Z(m, false)) - z), 1e-12) << m;
    EXPECT_LT(max_abs(circuit_unitary(synthesize_Z(m, true)) - z), 1e-12) << m;
  }
}

TEST(Compiler, KCorrectorIdentity) {
  for (int m = 2; m <= 4; ++m) {
    const KCorrector k = k_corrector_identity(m);
    EXPECT_LT(k.residual, 1e-10) << m;
    EXPECT_LT(max_abs(k.w0 - Matrix::Identity(k.w0.rows(), k.w0.cols())), 1e-12);
    EXPECT_LT(unitarity_residual(k.w1), 1e-12);
  }
  const KCorrector k2 = k_corrector_identity(2);
  Matrix expected(2, 2);
  expected << -1, 1, 1, 1;
  EXPECT_LT(max_abs(k2.w1 - expected / std::sqrt(2.0)), 1e-12);
}

Circuit one_gate(int n, Gate g) {
  Circuit c;
  c.wire_type = WireType::kMode;
  c.n_wires = n;
  c.gates.push_back(std::move(g));
  return c;
}

TEST(Compiler, FswapCompilesToTwoGates) {
  const CompileResult r = compile_fqt_circuit(one_gate(2, make_gate(GateKind::kFSwap, {0, 1})));
  ASSERT_EQ(r.qubit_circuit.gates.size(), 2u);
  EXPECT_EQ(r.qubit_circuit.gates[0].kind, GateKind::kSwapDefect);
  EXPECT_EQ(r.qubit_circuit.gates[1].kind, GateKind::kQSwap);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(Compiler, FirstModeFlipIsBareX) {
  const CompileResult r = compile_fqt_circuit(one_gate(3, make_gate(GateKind::kX, {0})));
  ASSERT_EQ(r.qubit_circuit.gates.size(), 1u);
  EXPECT_EQ(r.qubit_circuit.gates[0].kind, GateKind::kX);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(Compiler, IdentityCompilesToEmptyCircuit) {
  Circuit c;
  c.wire_type = WireType::kMode;
  c.n_wires = 3;
  const CompileResult r = compile_fqt_circuit(c);
  EXPECT_TRUE(r.qubit_circuit.gates.empty());
  EXPECT_LT(r.residual, 1e-15);
}

TEST(Compiler, HoppingExponential) {
  const FockOperator a0 = annihilator(1, 2), a1 = annihilator(2, 2);
  const Matrix hop = (a0.adjoint() * a1 + a1.adjoint() * a0).dense();
  for (int n = 2; n <= 4; ++n) {
    const CompileResult r =
        compile_fqt_circuit(one_gate(n, make_custom({0, n - 1}, expi_hermitian(hop, M_PI / 4))));
    EXPECT_LT(r.residual, 1e-8);
  }
}

TEST(Compiler, RandomGatesCompileExactly) {
  Rng rng(testing::kSeed + 2);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int n = 2; n <= 5; ++n) {
    Circuit c;
    c.wire_type = WireType::kMode;
    c.n_wires = n;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        c.gates.push_back(make_custom({a, b}, random_parity_unitary(2, (a + b) % 2, rng)));
      }
      c.gates.push_back(make_custom({a}, random_parity_unitary(1, a % 2, rng)));
      c.gates.push_back(make_gate(GateKind::kPhase, {a}, angle(rng)));
    }
    c.gates.push_back(make_gate(GateKind::kGHat, {0, n - 1}));
    c.gates.push_back(make_gate(GateKind::kHHat, {n - 1, 0}));
    c.gates.push_back(make_gate(GateKind::kCPhase, {0, n - 1}, angle(rng)));
    c.gates.push_back(make_gate(GateKind::kLambdaZ, {n - 1, 0}));
    const CompileResult r = compile_fqt_circuit(c);
    EXPECT_LT(r.residual, 1e-8) << n;
  }
}

TEST(Compiler, EvenInputsEmitParityPreservingGates) {
  Rng rng(testing::kSeed + 3);
  const int n = 4;
  Circuit c;
  c.wire_type = WireType::kMode;
  c.n_wires = n;
  for (int t = 0; t < 6; ++t) c.gates.push_back(make_custom({t % n, (t + 2) % n}, random_parity_unitary(2, 0, rng)));
  const CompileResult r = compile_fqt_circuit(c);
  EXPECT_LT(r.residual, 1e-8);
  const Matrix p = qubit_parity(n);
  for (const Gate& g : r.qubit_circuit.gates) {
    Circuit single;
    single.n_wires = n;
    single.gates.push_back(g);
    EXPECT_LT(commutator_residual(circuit_unitary(single), p), 1e-12) << to_string(g.kind);
  }
  EXPECT_EQ(r.gate_counts.count("x"), 0u);
}

TEST(Compiler, NamedAnglesBecomeDiscreteGates) {
  const CompileResult r = compile_fqt_circuit(one_gate(2, make_gate(GateKind::kPhase, {1}, M_PI / 2)));
  EXPECT_EQ(r.gate_counts.at("lambda_phase"), 2);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(Compiler, RejectsInvalidGates) {
  EXPECT_THROW(compile_fqt_circuit(one_gate(2, make_custom({0, 1}, 2.0 * Matrix::Identity(4, 4)))),
               std::invalid_argument);
  EXPECT_THROW(compile_fqt_circuit(one_gate(2, make_custom({0}, hadamard()))), std::invalid_argument);
  Circuit qubits;
  EXPECT_THROW(compile_fqt_circuit(qubits), std::invalid_argument);
}

}  // namespace
}  // namespace fermsim
