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

#include "fermsim/bk_encoding.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fermsim/channels.hpp"
#include "fermsim/linalg.hpp"

namespace fermsim {

namespace {

void check_m(int m) {
  if (m < 1 || m > kMaxBkModes) {
    throw std::invalid_argument("mode count outside 1..64");
  }
}

void check_j(int j, int m) {
  check_m(m);
  if (j < 0 || j >= m) throw std::invalid_argument("mode index outside 0..M-1");
}

std::uint64_t low_mask(int m) {
  return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

std::vector<int> bits_of(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t mask_of_S(int j, int m) {
  const int t = bk_depth(m);
  std::uint64_t mask = 0;
  for (int k = 0; k < m; ++k) {
    if (preceq(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(j), t)) {
      mask |= std::uint64_t{1} << k;
    }
  }
  return mask;
}

// Rows of the encoding matrix and of its inverse over GF(2).
struct Gf2Pair {
  std::vector<std::uint64_t> forward;
  std::vector<std::uint64_t> inverse;
};

Gf2Pair encoding_matrices(int m) {
  Gf2Pair out;
  for (int j = 0; j < m; ++j) out.forward.push_back(mask_of_S(j, m));
  std::vector<std::uint64_t> a = out.forward;
  std::vector<std::uint64_t> inv(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) inv[j] = std::uint64_t{1} << j;
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r) {
      if ((a[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("BK encoding matrix is singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < m; ++r) {
      if (r != col && ((a[r] >> col) & 1u)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  out.inverse = std::move(inv);
  return out;
}

const Gf2Pair& cached_matrices(int m) {
  static std::once_flag flags[kMaxBkModes + 1];
  static Gf2Pair cache[kMaxBkModes + 1];
  std::call_once(flags[m], [m] { cache[m] = encoding_matrices(m); });
  return cache[m];
}

int parity64(std::uint64_t x) { return std::popcount(x) & 1; }

// Big-endian register index (wire 0 most significant) of a bit mask.
std::size_t register_index(std::uint64_t mask, int m) {
  std::size_t x = 0;
  for (int i = 0; i < m; ++i) {
    if ((mask >> i) & 1u) x |= std::size_t{1} << (m - 1 - i);
  }
  return x;
}

std::uint64_t mask_of_register(std::size_t index, int m) {
  std::uint64_t mask = 0;
  for (int i = 0; i < m; ++i) {
    if ((index >> (m - 1 - i)) & 1u) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace

int bk_depth(int m) {
  check_m(m);
  int t = 0;
  while ((std::uint64_t{1} << t) < static_cast<std::uint64_t>(m)) ++t;
  return std::max(t, 1);
}

bool preceq(std::uint64_t alpha, std::uint64_t beta, int t) {
  if (t < 1 || t > 6) throw std::invalid_argument("bit depth outside 1..6");
  if (alpha >> t || beta >> t) throw std::invalid_argument("index exceeds bit depth");
  for (int l0 = 0; l0 < t; ++l0) {
    const std::uint64_t low = (std::uint64_t{1} << l0) - 1;
    const bool high_equal = (alpha >> l0) == (beta >> l0);
    const bool low_ones = (beta & low) == low;
    if (high_equal && low_ones) return true;
  }
  return false;
}

std::vector<int> bk_set_S(int j, int m) {
  check_j(j, m);
  return bits_of(mask_of_S(j, m));
}

std::vector<int> bk_successors(int j, int m) {
  check_j(j, m);
  const int t = bk_depth(m);
  std::vector<int> out;
  for (int i = 0; i < m; ++i) {
    if (preceq(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(i), t)) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> bk_set_K(int j, int m) {
  check_j(j, m);
  std::uint64_t row = cached_matrices(m).inverse[j];
  row &= ~(std::uint64_t{1} << j);
  return bits_of(row);
}

std::vector<int> bk_set_L(int j, int m) {
  check_j(j, m);
  // Row vector of the prefix i < j, multiplied by the inverse encoding.
  const auto& inv = cached_matrices(m).inverse;
  std::uint64_t row = 0;
  for (int i = 0; i < j; ++i) row ^= inv[i];
  return bits_of(row);
}

std::uint64_t bk_encode(std::uint64_t s, int m) {
  check_m(m);
  if (s & ~low_mask(m)) throw std::invalid_argument("occupation exceeds M modes");
  const auto& fwd = cached_matrices(m).forward;
  std::uint64_t x = 0;
  for (int j = 0; j < m; ++j) {
    if (parity64(fwd[j] & s)) x |= std::uint64_t{1} << j;
  }
  return x;
}

std::uint64_t bk_decode(std::uint64_t x, int m) {
  check_m(m);
  if (x & ~low_mask(m)) throw std::invalid_argument("register exceeds M modes");
  const auto& inv = cached_matrices(m).inverse;
  std::uint64_t s = 0;
  for (int j = 0; j < m; ++j) {
    if (parity64(inv[j] & x)) s |= std::uint64_t{1} << j;
  }
  return s;
}

std::vector<BkTableRow> bk_table(int m) {
  check_m(m);
  std::vector<BkTableRow> rows;
  for (int j = 0; j < m; ++j) {
    rows.push_back({j, bk_set_S(j, m), bk_set_K(j, m), bk_set_L(j, m), bk_successors(j, m)});
  }
  return rows;
}

Circuit extraction_circuit(int j, int m, int ancilla, int offset) {
  check_j(j, m);
  Circuit c;
  c.wire_type = WireType::kQubit;
  c.n_wires = std::max(ancilla + 1, offset + m);
  std::vector<int> a = bk_set_K(j, m);
  a.push_back(j);
  std::sort(a.begin(), a.end());
  for (int i : a) c.gates.push_back(make_gate(GateKind::kCNot, {offset + i, ancilla}));
  for (int i : bk_successors(j, m)) {
    c.gates.push_back(make_gate(GateKind::kCNot, {ancilla, offset + i}));
  }
  for (int i : bk_set_L(j, m)) {
    c.gates.push_back(make_gate(GateKind::kLambdaZ, {ancilla, offset + i}));
  }
  return c;
}

Circuit jwt_extraction_circuit(int j, int m, int ancilla, int offset) {
  check_j(j, m);
  Circuit c;
  c.wire_type = WireType::kQubit;
  c.n_wires = std::max(ancilla + 1, offset + m);
  c.gates.push_back(make_gate(GateKind::kCNot, {offset + j, ancilla}));
  c.gates.push_back(make_gate(GateKind::kCNot, {ancilla, offset + j}));
  for (int i = 0; i < j; ++i) {
    c.gates.push_back(make_gate(GateKind::kLambdaZ, {ancilla, offset + i}));
  }
  return c;
}

ExtractionStageCounts extraction_stage_counts(int j, int m) {
  ExtractionStageCounts out;
  out.a = static_cast<int>(bk_set_K(j, m).size()) + 1;
  out.b = static_cast<int>(bk_successors(j, m).size());
  out.c = static_cast<int>(bk_set_L(j, m).size());
  return out;
}

int max_extraction_gates_bk(int m) {
  int best = 0;
  for (int j = 0; j < m; ++j) best = std::max(best, extraction_stage_counts(j, m).total());
  return best;
}

int max_extraction_gates_jwt(int m) {
  check_m(m);
  int best = 0;
  for (int j = 0; j < m; ++j) {
    best = std::max(best, static_cast<int>(jwt_extraction_circuit(j, m).gates.size()));
  }
  return best;
}

std::string bk_benchmark_csv(int m_max) {
  check_m(m_max);
  std::ostringstream out;
  out << "M,max_gates_bk,max_gates_jwt\n";
  for (int m = 1; m <= m_max; ++m) {
    out << m << ',' << max_extraction_gates_bk(m) << ',' << max_extraction_gates_jwt(m) << '\n';
  }
  return out.str();
}

Matrix bk_encoding_unitary(int m) {
  if (m < 1 || m > kMaxDenseModes) throw std::invalid_argument("dense encoding limited to 10 modes");
  const std::size_t dim = std::size_t{1} << m;
  std::vector<std::size_t> image(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    image[x] = register_index(bk_encode(mask_of_register(x, m), m), m);
  }
  return permutation_matrix(image);
}

Circuit simulate_mode_gate_on_qubits(const Gate& mode_gate, int m) {
  check_m(m);
  std::vector<int> modes = mode_gate.wires;
  const int k = static_cast<int>(modes.size());
  if (k < 1 || k > 2) throw std::invalid_argument("only one- and two-mode gates are simulated");
  for (int w : modes) check_j(w, m);
  Matrix local = gate_matrix(mode_gate);
  if (operator_parity(local, k, k) < 0) {
    throw std::invalid_argument("mode gate has no definite parity");
  }
  if (k == 2 && modes[0] > modes[1]) {
    const Matrix f = gate_matrix(make_gate(GateKind::kFSwap, {0, 1}));
    local = f * local * f;
    std::swap(modes[0], modes[1]);
  }
  Circuit c;
  c.wire_type = WireType::kQubit;
  c.n_wires = m + k;
  std::vector<Circuit> stages;
  for (int a = 0; a < k; ++a) stages.push_back(extraction_circuit(modes[a], m, a, k));
  for (const Circuit& s : stages) {
    c.gates.insert(c.gates.end(), s.gates.begin(), s.gates.end());
  }
  std::vector<int> ancillas(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) ancillas[a] = a;
  c.gates.push_back(make_custom(ancillas, local));
  for (auto s = stages.rbegin(); s != stages.rend(); ++s) {
    c.gates.insert(c.gates.end(), s->gates.rbegin(), s->gates.rend());
  }
  return c;
}

Matrix pair_isometry(int n_qubits) {
  if (n_qubits < 1 || 2 * n_qubits > kMaxDenseModes) {
    throw std::invalid_argument("pair isometry limited to 5 qubits");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  Matrix v = Matrix::Zero(static_cast<Eigen::Index>(dim * dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (int q = 0; q < n_qubits; ++q) {
      const std::size_t b = (x >> (n_qubits - 1 - q)) & 1u;
      y = (y << 2) | (b ? 3u : 0u);
    }
    v(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return v;
}

Circuit qubit_to_fermion_embed(const Circuit& qubits) {
  qubits.validate();
  if (qubits.wire_type != WireType::kQubit) {
    throw std::invalid_argument("qubit_to_fermion_embed expects a qubit circuit");
  }
  if (2 * qubits.n_wires > 16) throw std::invalid_argument("embedding exceeds 16 modes");
  Circuit out;
  out.wire_type = WireType::kMode;
  out.n_wires = 2 * qubits.n_wires;
  out.global_phase = qubits.global_phase;
  for (const Gate& g : qubits.gates) {
    const int k = static_cast<int>(g.wires.size());
    if (k > 2) throw std::invalid_argument("only one- and two-qubit gates are embedded");
    const Matrix v = pair_isometry(k);
    const Matrix local = gate_matrix(g);
    const Eigen::Index d = v.rows();
    Matrix lifted = v * local * v.adjoint() + (Matrix::Identity(d, d) - v * v.adjoint());
    std::vector<int> modes;
    for (int w : g.wires) {
      modes.push_back(2 * w);
      modes.push_back(2 * w + 1);
    }
    out.gates.push_back(make_custom(modes, std::move(lifted)));
  }
  return out;
}

}  // namespace fermsim
