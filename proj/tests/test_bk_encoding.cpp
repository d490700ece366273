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

#include <bit>
#include <cmath>

#include "fermsim/bk_encoding.hpp"
#include "fermsim/channels.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/linalg.hpp"
#include "test_util.hpp"

namespace fermsim {
namespace {

int parity64(std::uint64_t x) { return std::popcount(x) & 1; }

std::uint64_t mask_of(const std::vector<int>& set) {
  std::uint64_t m = 0;
  for (int i : set) m |= std::uint64_t{1} << i;
  return m;
}

std::uint64_t random_bits(int m, Rng& rng) {
  const std::uint64_t r = rng();
  return m == 64 ? r : r & ((std::uint64_t{1} << m) - 1);
}

// Classical simulation of a CNOT/CZ circuit on a basis state. Bit w of the
// state is wire w.
struct BasisState {
  std::uint64_t bits = 0;
  int sign = 1;
};

BasisState run_classical(const Circuit& c, BasisState s) {
  for (const Gate& g : c.gates) {
    const auto bit = [&](int w) { return (s.bits >> w) & 1u; };
    if (g.kind == GateKind::kCNot) {
      if (bit(g.wires[0])) s.bits ^= std::uint64_t{1} << g.wires[1];
    } else if (g.kind == GateKind::kLambdaZ) {
      if (bit(g.wires[0]) && bit(g.wires[1])) s.sign = -s.sign;
    } else {
      ADD_FAILURE() << "unexpected gate " << to_string(g.kind);
    }
  }
  return s;
}

// Checks one extraction: ancilla on wire 0 receives s_j, the register holds
// the encoding of s with mode j emptied, and the sign is the prefix parity.
void check_extraction(const Circuit& c, int j, int m, std::uint64_t s) {
  const std::uint64_t x = bk_encode(s, m);
  const BasisState out = run_classical(c, {x << 1, 1});
  const std::uint64_t sj = (s >> j) & 1u;
  const std::uint64_t cleared = s & ~(std::uint64_t{1} << j);
  const std::uint64_t prefix = parity64(s & ((std::uint64_t{1} << j) - 1));
  ASSERT_EQ(out.bits & 1u, sj) << "j=" << j;
  ASSERT_EQ(out.bits >> 1, bk_encode(cleared, m)) << "j=" << j;
  ASSERT_EQ(out.sign, (sj && prefix) ? -1 : 1) << "j=" << j;
}

TEST(BkEncoding, DepthPromotesSingleMode) {
  EXPECT_EQ(bk_depth(1), 1);
  EXPECT_EQ(bk_depth(2), 1);
  EXPECT_EQ(bk_depth(5), 3);
  EXPECT_EQ(bk_depth(64), 6);
  EXPECT_THROW(bk_depth(65), std::invalid_argument);
}

TEST(BkEncoding, PrecedenceIsPartialOrder) {
  for (int t = 1; t <= 6; ++t) {
    const std::uint64_t size = std::uint64_t{1} << t;
    for (std::uint64_t a = 0; a < size; ++a) {
      EXPECT_TRUE(preceq(a, a, t));
      int successors = 0;
      for (std::uint64_t b = 0; b < size; ++b) {
        if (!preceq(a, b, t)) continue;
        ++successors;
        EXPECT_LE(a, b);
        if (a != b) EXPECT_FALSE(preceq(b, a, t));
        if (t <= 4) {
          for (std::uint64_t c = 0; c < size; ++c) {
            if (preceq(b, c, t)) EXPECT_TRUE(preceq(a, c, t));
          }
        }
      }
      EXPECT_LE(successors, t);
    }
  }
}

TEST(BkEncoding, SetsForEightModes) {
  EXPECT_EQ(bk_set_S(7, 8), (std::vector<int>{4, 5, 6, 7}));
  EXPECT_EQ(bk_set_S(3, 8), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(bk_set_S(4, 8), (std::vector<int>{4}));
  EXPECT_EQ(bk_successors(0, 8), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(bk_successors(4, 8), (std::vector<int>{4, 5, 7}));
}

TEST(BkEncoding, EncodeDecodeRoundTripExhaustive) {
  for (int m = 1; m <= 12; ++m) {
    const std::uint64_t size = std::uint64_t{1} << m;
    for (std::uint64_t s = 0; s < size; ++s) {
      const std::uint64_t x = bk_encode(s, m);
      ASSERT_EQ(bk_decode(x, m), s);
      ASSERT_EQ(bk_encode(bk_decode(s, m), m), s);
    }
  }
}

TEST(BkEncoding, EncodingDefinitionAndLinearity) {
  Rng rng(testing::kSeed);
  for (int m = 1; m <= 64; ++m) {
    std::vector<std::uint64_t> rows;
    for (int j = 0; j < m; ++j) rows.push_back(mask_of(bk_set_S(j, m)));
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t s = random_bits(m, rng), u = random_bits(m, rng);
      const std::uint64_t x = bk_encode(s, m);
      for (int j = 0; j < m; ++j) ASSERT_EQ((x >> j) & 1u, static_cast<std::uint64_t>(parity64(rows[j] & s)));
      ASSERT_EQ(bk_encode(s ^ u, m), x ^ bk_encode(u, m));
      ASSERT_EQ(bk_decode(x, m), s);
    }
  }
}

TEST(BkEncoding, ReconstructionIdentities) {
  Rng rng(testing::kSeed + 1);
  for (int m = 1; m <= 64; ++m) {
    for (int j = 0; j < m; ++j) {
      const std::uint64_t k = mask_of(bk_set_K(j, m));
      const std::uint64_t l = mask_of(bk_set_L(j, m));
      ASSERT_EQ(k & (std::uint64_t{1} << j), 0u);
      for (int trial = 0; trial < 10; ++trial) {
        const std::uint64_t s = random_bits(m, rng);
        const std::uint64_t x = bk_encode(s, m);
        ASSERT_EQ(((x >> j) & 1u) ^ static_cast<std::uint64_t>(parity64(x & k)), (s >> j) & 1u);
        const std::uint64_t prefix = parity64(s & ((std::uint64_t{1} << j) - 1));
        ASSERT_EQ(static_cast<std::uint64_t>(parity64(x & l)), prefix);
      }
    }
  }
}

TEST(BkEncoding, ExtractionExhaustiveAtEightModes) {
  const int m = 8;
  for (int j = 0; j < m; ++j) {
    const Circuit c = extraction_circuit(j, m);
    EXPECT_EQ(c.n_wires, m + 1);
    for (std::uint64_t s = 0; s < 256; ++s) check_extraction(c, j, m, s);
  }
}

TEST(BkEncoding, ExtractionRandomizedUpToSixtyFourModes) {
  Rng rng(testing::kSeed + 2);
  for (int m : {13, 31, 32, 33, 63}) {
    for (int j = 0; j < m; ++j) {
      const Circuit c = extraction_circuit(j, m);
      for (int trial = 0; trial < 20; ++trial) check_extraction(c, j, m, random_bits(m, rng));
    }
  }
}

TEST(BkEncoding, ExtractionMatchesUnitaryOracle) {
  // Same check through the dense circuit unitary, wire 0 most significant.
  const int m = 4;
  const Matrix enc = bk_encoding_unitary(m);
  for (int j = 0; j < m; ++j) {
    const Matrix u = circuit_unitary(extraction_circuit(j, m));
    for (std::size_t idx = 0; idx < 16; ++idx) {
      const Occupation s = occupation_of(idx, m);
      Vector in = Vector::Zero(32);
      Eigen::Index x = 0;
      for (Eigen::Index r = 0; r < 16; ++r) {
        if (std::abs(enc(r, static_cast<Eigen::Index>(idx))) > 0.5) x = r;
      }
      in(x) = 1.0;
      Occupation cleared = s;
      cleared[j] = 0;
      int prefix = 0;
      for (int i = 0; i < j; ++i) prefix += s[i];
      Eigen::Index y = 0;
      for (Eigen::Index r = 0; r < 16; ++r) {
        if (std::abs(enc(r, static_cast<Eigen::Index>(basis_index(cleared)))) > 0.5) y = r;
      }
      Vector expected = Vector::Zero(32);
      expected((static_cast<Eigen::Index>(s[j]) << 4) | y) = (s[j] && prefix % 2) ? -1.0 : 1.0;
      EXPECT_LT((u * in - expected).norm(), 1e-14);
    }
  }
}

TEST(BkEncoding, GateCountBound) {
  for (int m = 4; m <= 64; ++m) {
    const int t = static_cast<int>(std::ceil(std::log2(m)));
    for (int j = 0; j < m; ++j) {
      EXPECT_LE(extraction_stage_counts(j, m).total(), 3 * (t + 1)) << m << " " << j;
      EXPECT_EQ(static_cast<int>(extraction_circuit(j, m).gates.size()),
                extraction_stage_counts(j, m).total());
      EXPECT_EQ(static_cast<int>(jwt_extraction_circuit(j, m).gates.size()), j + 2);
    }
    EXPECT_EQ(max_extraction_gates_jwt(m), m + 1);
  }
  EXPECT_LT(max_extraction_gates_bk(64), max_extraction_gates_jwt(64) / 3);
}

TEST(BkEncoding, JwtExtractionIsCorrect) {
  const int m = 6;
  for (int j = 0; j < m; ++j) {
    const Circuit c = jwt_extraction_circuit(j, m);
    for (std::uint64_t s = 0; s < 64; ++s) {
      const BasisState out = run_classical(c, {s << 1, 1});
      const std::uint64_t sj = (s >> j) & 1u;
      EXPECT_EQ(out.bits, ((s & ~(std::uint64_t{1} << j)) << 1) | sj);
      EXPECT_EQ(out.sign, (sj && parity64(s & ((std::uint64_t{1} << j) - 1))) ? -1 : 1);
    }
  }
}

TEST(BkEncoding, BenchmarkCsv) {
  const std::string csv = bk_benchmark_csv(4);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "M,max_gates_bk,max_gates_jwt");
  EXPECT_NE(csv.find("\n4,"), std::string::npos);
}

Matrix random_parity_unitary(int k, int parity, Rng& rng) {
  const Eigen::Index d = Eigen::Index{1} << k;
  const Matrix p = parity_sign_operator(k).dense();
  const Matrix u = random_unitary(d, rng);
  Matrix even = (u + p * u * p) / 2.0;
  Eigen::JacobiSVD<Matrix> svd(even, Eigen::ComputeFullU | Eigen::ComputeFullV);
  even = svd.matrixU() * svd.matrixV().adjoint();
  if (parity == 0) return even;
  return (annihilator(1, k) + creator(1, k)).dense() * even;
}

// Block of the circuit unitary with all ancillas in |0>, and the weight that
// leaks to other ancilla values.
std::pair<Matrix, double> ancilla_block(const Matrix& u, int ancillas, int m) {
  const Eigen::Index reg = Eigen::Index{1} << m;
  const Matrix block = u.topLeftCorner(reg, reg);
  const double leak = u.block(reg, 0, u.rows() - reg, reg).norm();
  (void)ancillas;
  return {block, leak};
}

TEST(BkEncoding, ModeGateSimulation) {
  Rng rng(testing::kSeed + 3);
  for (int m = 1; m <= 8; ++m) {
    const Matrix enc = bk_encoding_unitary(m);
    std::vector<std::vector<int>> placements;
    for (int a = 0; a < m; ++a) placements.push_back({a});
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b && (m <= 4 || (a + 2 * b) % 5 == 0)) placements.push_back({a, b});
      }
    }
    for (const auto& modes : placements) {
      const int k = static_cast<int>(modes.size());
      for (int parity : {0, 1}) {
        const Matrix local = random_parity_unitary(k, parity, rng);
        const Circuit c = simulate_mode_gate_on_qubits(make_custom(modes, local), m);
        std::vector<int> field_modes;
        for (int w : modes) field_modes.push_back(w + 1);
        const Matrix target = enc * embed_field_operator(local, field_modes, m) * enc.adjoint();
        const auto [block, leak] = ancilla_block(circuit_unitary(c), k, m);
        EXPECT_LT(max_abs(block - target), 1e-10) << "m=" << m << " modes " << modes[0];
        EXPECT_LT(leak, 1e-10);
      }
    }
  }
}

TEST(BkEncoding, ModeGateExamples) {
  const int m = 8;
  const Matrix enc = bk_encoding_unitary(m);
  const Matrix x = (annihilator(1, 1) + creator(1, 1)).dense();
  for (int j : {0, 3, 7}) {
    const Circuit c = simulate_mode_gate_on_qubits(make_custom({j}, x), m);
    const std::vector<int> mode = {j + 1};
    const Matrix target = enc * embed_field_operator(x, mode, m) * enc.adjoint();
    EXPECT_LT(max_abs(ancilla_block(circuit_unitary(c), 1, m).first - target), 1e-10);
  }
  const Circuit id = simulate_mode_gate_on_qubits(make_custom({2, 5}, Matrix::Identity(4, 4)), m);
  const Matrix u = circuit_unitary(id);
  EXPECT_LT(max_abs(u - Matrix::Identity(u.rows(), u.cols())), 1e-12);
  const Matrix number_phase = Eigen::Vector2cd(1.0, std::polar(1.0, 0.37)).asDiagonal();
  const Circuit np = simulate_mode_gate_on_qubits(make_custom({6}, number_phase), m);
  const std::vector<int> seven = {7};
  const Matrix target = enc * embed_field_operator(number_phase, seven, m) * enc.adjoint();
  EXPECT_LT(max_abs(ancilla_block(circuit_unitary(np), 1, m).first - target), 1e-10);
}

TEST(BkEncoding, QubitToFermionEmbedding) {
  Rng rng(testing::kSeed + 4);
  for (int nq = 1; nq <= 4; ++nq) {
    Circuit qc;
    qc.wire_type = WireType::kQubit;
    qc.n_wires = nq;
    for (int t = 0; t < 6; ++t) {
      const int a = t % nq;
      if (nq > 1 && t % 2) {
        const int b = (a + 1 + t) % nq == a ? (a + 1) % nq : (a + 1 + t) % nq;
        qc.gates.push_back(make_custom({a, b}, random_unitary(4, rng)));
      } else {
        qc.gates.push_back(make_custom({a}, random_unitary(2, rng)));
      }
    }
    if (nq >= 2) qc.gates.push_back(make_gate(GateKind::kCNot, {1, 0}));
    const Circuit mc = qubit_to_fermion_embed(qc);
    EXPECT_EQ(mc.n_wires, 2 * nq);
    for (const Gate& g : mc.gates) {
      const int k = static_cast<int>(g.wires.size());
      EXPECT_EQ(operator_parity(g.payload, k, k), 0);
    }
    const Matrix v = pair_isometry(nq);
    EXPECT_LT(max_abs(v.adjoint() * circuit_unitary(mc) * v - circuit_unitary(qc)), 1e-10) << nq;
  }
  Circuit three;
  three.n_wires = 3;
  three.gates.push_back(make_gate(GateKind::kLambdaXHat, {0, 1, 2}));
  EXPECT_THROW(qubit_to_fermion_embed(three), std::invalid_argument);
}

TEST(BkEncoding, RejectsBadArguments) {
  EXPECT_THROW(bk_set_S(8, 8), std::invalid_argument);
  EXPECT_THROW(bk_encode(1u << 5, 5), std::invalid_argument);
  EXPECT_THROW(extraction_circuit(-1, 4), std::invalid_argument);
  EXPECT_THROW(preceq(8, 1, 3), std::invalid_argument);
}

}  // namespace
}  // namespace fermsim
