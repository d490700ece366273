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

#include <algorithm>
#include <bit>
#include <cmath>

#include "fermsim/bk_encoding.hpp"
#include "fermsim/channels.hpp"
#include "fermsim/circuit.hpp"
#include "fermsim/compiler.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/jordan_wigner.hpp"
#include "fermsim/linalg.hpp"
#include "fermsim_tools/verify.hpp"
#include "helpers.hpp"

namespace fermsim::verify {
namespace {

constexpr double kMatrixTol = 1e-10;
// Compiled circuits go through numerical two-qubit decompositions.
constexpr double kCompileTol = 1e-8;

Matrix controlled(const Matrix& u) {
  const Eigen::Index d = u.rows();
  Matrix c = Matrix::Identity(2 * d, 2 * d);
  c.bottomRightCorner(d, d) = u;
  return c;
}

Matrix hadamard() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

Matrix qubit_parity(int n) {
  std::vector<Matrix> zs(static_cast<std::size_t>(n), letter_matrix('Z'));
  return kron_all(zs);
}

// Swaps the two most significant of the given number of qubits.
Matrix swap_first_two(int qubits) {
  std::vector<std::size_t> image(std::size_t{1} << qubits);
  for (std::size_t x = 0; x < image.size(); ++x) {
    const std::size_t hi = (x >> (qubits - 1)) & 1u, next = (x >> (qubits - 2)) & 1u;
    const std::size_t y = x & ~(std::size_t{3} << (qubits - 2));
    image[x] = y | (next << (qubits - 1)) | (hi << (qubits - 2));
  }
  return permutation_matrix(image);
}

Circuit one_mode_gate(int n, Gate g) {
  Circuit c;
  c.wire_type = WireType::kMode;
  c.n_wires = n;
  c.gates.push_back(std::move(g));
  return c;
}

std::vector<Check> universal_identity_checks() {
  const UniversalSetResiduals r = universal_set_identities();
  std::vector<Check> out = {
      below("universal/lambda_phase_exponential", r.lambda_phase, kMatrixTol),
      below("universal/lambda_z_exponential", r.lambda_z, kMatrixTol),
      below("universal/g_hat_exponential", r.g_exponential, kMatrixTol),
      below("universal/g_hat_split_exponential", r.g_split, kMatrixTol),
      below("universal/h_hat_from_g_hat", r.h_from_g, kMatrixTol),
      below("universal/h_hat_extension", r.h_extension, kMatrixTol),
  };
  Matrix g(2, 2);
  g << 1, Complex(0, 1), Complex(0, 1), 1;
  out.push_back(below("universal/g_hat_is_extension",
                      max_abs(gate_matrix(make_gate(GateKind::kGHat, {0, 1})) -
                              parity_preserving_extension(g / std::sqrt(2.0))),
                      kMatrixTol));
  return out;
}

std::vector<Check> parity_embedding_checks(Rng rng) {
  std::vector<Check> out;
  const Matrix x = letter_matrix('X');
  for (int m = 2; m <= 4; ++m) {
    const Matrix v = parity_embedding(m);
    const Eigen::Index rest = Eigen::Index{1} << (m - 1);
    const Matrix x_first = kron(x, Matrix::Identity(rest, rest));
    const Matrix a = random_unitary(rest, rng);
    const Matrix b = random_unitary(rest, rng);
    const Matrix ea = parity_preserving_extension(a);
    const std::string p = "parity_embedding/m=" + std::to_string(m);
    out.push_back(below(p + "/involution", max_abs(v * v - Matrix::Identity(2 * rest, 2 * rest)),
                        kMatrixTol));
    out.push_back(below(p + "/commutes_with_leading_x", max_abs(v * x_first * v - x_first), kMatrixTol));
    out.push_back(below(p + "/homomorphism",
                        max_abs(ea * parity_preserving_extension(b) - parity_preserving_extension(a * b)),
                        kMatrixTol));
    out.push_back(below(p + "/preserves_parity", commutator_residual(ea, qubit_parity(m)), kMatrixTol));
  }
  const Matrix s = swap_first_two(3);
  for (const auto& [name, u] : {std::pair{"x", x}, std::pair{"h", hadamard()}}) {
    const Matrix lhs = parity_preserving_extension(controlled(u));
    const Matrix rhs = s * controlled(parity_preserving_extension(u)) * s;
    out.push_back(below(std::string("swap_with_parity/") + name, max_abs(lhs - rhs), kMatrixTol));
  }
  return out;
}

std::vector<Check> synthesis_checks() {
  std::vector<Check> out;
  for (int m = 1; m <= 5; ++m) {
    const Matrix z = z_permutation(m);
    const std::string p = "z_synthesis/m=" + std::to_string(m);
    out.push_back(below(p + "/plain", max_abs(circuit_unitary(synthesize_Z(m, false)) - z), kMatrixTol));
    out.push_back(below(p + "/expanded", max_abs(circuit_unitary(synthesize_Z(m, true)) - z), kMatrixTol));
  }
  for (int m = 2; m <= 4; ++m) {
    const KCorrector k = k_corrector_identity(m);
    const std::string p = "k_corrector/m=" + std::to_string(m);
    out.push_back(below(p + "/identity", k.residual, kMatrixTol));
    out.push_back(below(p + "/even_block_is_identity",
                        max_abs(k.w0 - Matrix::Identity(k.w0.rows(), k.w0.cols())), kMatrixTol));
    out.push_back(below(p + "/odd_block_unitary", unitarity_residual(k.w1), kMatrixTol));
  }
  return out;
}

std::vector<Check> compile_example_checks() {
  std::vector<Check> out;
  const CompileResult fs = compile_fqt_circuit(one_mode_gate(2, make_gate(GateKind::kFSwap, {0, 1})));
  out.push_back(matches("compile/fswap/gate_count", std::to_string(fs.qubit_circuit.gates.size()), "2"));
  out.push_back(below("compile/fswap/residual", fs.residual, kMatrixTol));
  Circuit empty;
  empty.wire_type = WireType::kMode;
  empty.n_wires = 3;
  const CompileResult id = compile_fqt_circuit(empty);
  out.push_back(matches("compile/identity/gate_count", std::to_string(id.qubit_circuit.gates.size()), "0"));
  const FockOperator a0 = annihilator(1, 2), a1 = annihilator(2, 2);
  const Matrix hop = (a0.adjoint() * a1 + a1.adjoint() * a0).dense();
  for (int n = 2; n <= 4; ++n) {
    const CompileResult r =
        compile_fqt_circuit(one_mode_gate(n, make_custom({0, n - 1}, expi_hermitian(hop, M_PI / 4))));
    out.push_back(below("compile/hopping/n=" + std::to_string(n) + "/residual", r.residual, kCompileTol));
  }
  return out;
}

std::vector<Check> routing_checks(int n, Rng rng) {
  double fswaps = 0.0;
  for (int j = 1; j < n; ++j) fswaps = std::max(fswaps, max_abs(fswap(j, n) - qswap(j, n) * swap_defect(j, n)));
  double modes = 0.0, qubits = 0.0;
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      for (int parity : {0, 1}) {
        const Matrix local = random_parity_unitary(2, parity, rng);
        const std::vector<int> pair = {j, k};
        const Matrix direct = embed_field_operator(local, pair, n);
        const RoutedGate r = route_nearest_neighbor(local, j, k, n);
        modes = std::max(modes, max_abs(circuit_unitary(r.mode_circuit) - direct));
        qubits = std::max(qubits, max_abs(circuit_unitary(r.qubit_circuit) - direct));
      }
    }
  }
  const std::string p = "n=" + std::to_string(n);
  return {below("fswap_is_qswap_times_defect/" + p, fswaps, kMatrixTol),
          below("routing/" + p + "/mode_circuit", modes, kMatrixTol),
          below("routing/" + p + "/qubit_circuit", qubits, kMatrixTol)};
}

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

// Wire 0 is the ancilla and wire w > 0 is bit w - 1 of the register.
struct BasisState {
  std::uint64_t ancilla = 0;
  std::uint64_t reg = 0;
  int sign = 1;

  std::uint64_t bit(int w) const { return w == 0 ? ancilla : (reg >> (w - 1)) & 1u; }
  void flip(int w) {
    if (w == 0) ancilla ^= 1u;
    else reg ^= std::uint64_t{1} << (w - 1);
  }
};

BasisState run_classical(const Circuit& c, BasisState s) {
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::kCNot) {
      if (s.bit(g.wires[0])) s.flip(g.wires[1]);
    } else if (g.kind == GateKind::kLambdaZ) {
      if (s.bit(g.wires[0]) && s.bit(g.wires[1])) s.sign = -s.sign;
    } else {
      throw std::logic_error("extraction circuit contains " + to_string(g.kind));
    }
  }
  return s;
}

// The ancilla receives s_j, the register holds the encoding of s with mode j
// emptied, and the sign is the prefix parity.
bool extraction_ok(const Circuit& c, int j, int m, std::uint64_t s) {
  const BasisState out = run_classical(c, {0, bk_encode(s, m), 1});
  const std::uint64_t sj = (s >> j) & 1u;
  const std::uint64_t prefix = parity64(s & ((std::uint64_t{1} << j) - 1));
  return out.ancilla == sj && out.reg == bk_encode(s & ~(std::uint64_t{1} << j), m) &&
         out.sign == ((sj && prefix) ? -1 : 1);
}

std::vector<Check> bk_algebra_checks(int m_max, Rng rng) {
  int roundtrip = 0;
  for (int m = 1; m <= std::min(m_max, 12); ++m) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
      roundtrip += bk_decode(bk_encode(s, m), m) != s || bk_encode(bk_decode(s, m), m) != s;
    }
  }
  int definition = 0, reconstruction = 0;
  for (int m = 1; m <= m_max; ++m) {
    std::vector<std::uint64_t> rows;
    for (int j = 0; j < m; ++j) rows.push_back(mask_of(bk_set_S(j, m)));
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t s = random_bits(m, rng), u = random_bits(m, rng);
      const std::uint64_t x = bk_encode(s, m);
      for (int j = 0; j < m; ++j) definition += ((x >> j) & 1u) != static_cast<std::uint64_t>(parity64(rows[j] & s));
      definition += bk_encode(s ^ u, m) != (x ^ bk_encode(u, m));
      definition += bk_decode(x, m) != s;
    }
    for (int j = 0; j < m; ++j) {
      const std::uint64_t k = mask_of(bk_set_K(j, m));
      const std::uint64_t l = mask_of(bk_set_L(j, m));
      for (int trial = 0; trial < 10; ++trial) {
        const std::uint64_t s = random_bits(m, rng);
        const std::uint64_t x = bk_encode(s, m);
        const std::uint64_t prefix = parity64(s & ((std::uint64_t{1} << j) - 1));
        reconstruction += (((x >> j) & 1u) ^ static_cast<std::uint64_t>(parity64(x & k))) != ((s >> j) & 1u);
        reconstruction += static_cast<std::uint64_t>(parity64(x & l)) != prefix;
      }
    }
  }
  return {matches("bk/roundtrip_exhaustive/failures", std::to_string(roundtrip), "0"),
          matches("bk/encoding_definition_and_linearity/failures", std::to_string(definition), "0"),
          matches("bk/k_l_reconstruction/failures", std::to_string(reconstruction), "0")};
}

std::vector<Check> bk_extraction_checks(int m_max, Rng rng) {
  const int exhaustive_m = std::min(m_max, 8);
  int exhaustive = 0;
  for (int j = 0; j < exhaustive_m; ++j) {
    const Circuit c = extraction_circuit(j, exhaustive_m);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << exhaustive_m); ++s) {
      exhaustive += !extraction_ok(c, j, exhaustive_m, s);
    }
  }
  int randomized = 0, bound = 0, jwt = 0;
  for (int m = 1; m <= m_max; ++m) {
    const int t = static_cast<int>(std::ceil(std::log2(m)));
    for (int j = 0; j < m; ++j) {
      const Circuit c = extraction_circuit(j, m);
      for (int trial = 0; trial < 10; ++trial) randomized += !extraction_ok(c, j, m, random_bits(m, rng));
      if (m >= 4) bound += static_cast<int>(c.gates.size()) > 3 * (t + 1);
      jwt += static_cast<int>(jwt_extraction_circuit(j, m).gates.size()) != j + 2;
    }
  }
  return {matches("bk/extraction_exhaustive/m=" + std::to_string(exhaustive_m) + "/failures",
                std::to_string(exhaustive), "0"),
          matches("bk/extraction_randomized/failures", std::to_string(randomized), "0"),
          matches("bk/gate_bound_violations", std::to_string(bound), "0"),
          matches("bk/jwt_gates_linear_in_j/failures", std::to_string(jwt), "0")};
}

std::vector<Check> mode_gate_checks(int m, Rng rng) {
  const Matrix enc = bk_encoding_unitary(m);
  std::vector<std::vector<int>> placements;
  for (int a = 0; a < m; ++a) placements.push_back({a});
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b && (m <= 4 || (a + 2 * b) % 5 == 0)) placements.push_back({a, b});
    }
  }
  double equality = 0.0, leak = 0.0;
  const Eigen::Index reg = Eigen::Index{1} << m;
  for (const auto& modes : placements) {
    const int k = static_cast<int>(modes.size());
    for (int parity : {0, 1}) {
      const Matrix local = random_parity_unitary(k, parity, rng);
      const Matrix u = circuit_unitary(simulate_mode_gate_on_qubits(make_custom(modes, local), m));
      std::vector<int> field_modes;
      for (int w : modes) field_modes.push_back(w + 1);
      const Matrix target = enc * embed_field_operator(local, field_modes, m) * enc.adjoint();
      equality = std::max(equality, max_abs(u.topLeftCorner(reg, reg) - target));
      leak = std::max(leak, u.block(reg, 0, u.rows() - reg, reg).norm());
    }
  }
  const std::string p = "bk/mode_gate_simulation/m=" + std::to_string(m);
  return {below(p + "/channel_equality", equality, kMatrixTol),
          below(p + "/ancilla_leak", leak, kMatrixTol)};
}

std::vector<Check> embedding_checks(Rng rng) {
  std::vector<Check> out;
  for (int nq = 1; nq <= 3; ++nq) {
    Circuit qc;
    qc.n_wires = nq;
    for (int t = 0; t < 6; ++t) {
      const int a = t % nq;
      if (nq > 1 && t % 2) {
        qc.gates.push_back(make_custom({a, (a + 1) % nq}, random_unitary(4, rng)));
      } else {
        qc.gates.push_back(make_custom({a}, random_unitary(2, rng)));
      }
    }
    const Circuit mc = qubit_to_fermion_embed(qc);
    int odd = 0;
    for (const Gate& g : mc.gates) {
      const int k = static_cast<int>(g.wires.size());
      odd += operator_parity(g.payload, k, k) != 0;
    }
    const Matrix v = pair_isometry(nq);
    const std::string p = "qubit_embedding/n=" + std::to_string(nq);
    out.push_back(matches(p + "/non_even_gates", std::to_string(odd), "0"));
    out.push_back(below(p + "/roundtrip", max_abs(v.adjoint() * circuit_unitary(mc) * v - circuit_unitary(qc)),
                        kMatrixTol));
  }
  return out;
}

}  // namespace

std::vector<Task> universal_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks = {universal_identity_checks, synthesis_checks, compile_example_checks};
  tasks.push_back([rng = task_rng(o.seed, 0)] { return parity_embedding_checks(rng); });
  for (int n = 2; n <= o.n; ++n) {
    tasks.push_back([n, rng = task_rng(o.seed, n)] { return routing_checks(n, rng); });
  }
  return tasks;
}

std::vector<Task> bk_tasks(const SuiteOptions& o) {
  if (o.m > kMaxBkModes) throw std::invalid_argument("bk suite supports m <= 64");
  const int m = o.m;
  std::vector<Task> tasks;
  tasks.push_back([m, rng = task_rng(o.seed, 0)] { return bk_algebra_checks(m, rng); });
  tasks.push_back([m, rng = task_rng(o.seed, 1)] { return bk_extraction_checks(m, rng); });
  for (int k = 1; k <= std::min(m, 8); ++k) {
    tasks.push_back([k, rng = task_rng(o.seed, 1 + k)] { return mode_gate_checks(k, rng); });
  }
  tasks.push_back([rng = task_rng(o.seed, 10)] { return embedding_checks(rng); });
  return tasks;
}

nlohmann::json bk_gate_count_table(int m_max) {
  nlohmann::json rows = nlohmann::json::array();
  for (int m = 1; m <= m_max; ++m) {
    const int t = m == 1 ? 0 : static_cast<int>(std::ceil(std::log2(m)));
    rows.push_back({{"M", m},
                    {"max_gates_bk", max_extraction_gates_bk(m)},
                    {"max_gates_jwt", max_extraction_gates_jwt(m)},
                    {"bound", 3 * (t + 1)}});
  }
  return rows;
}

}  // namespace fermsim::verify
