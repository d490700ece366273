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

#include "fermsim/compiler.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "fermsim/channels.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/linalg.hpp"

namespace fermsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;
constexpr double kSynthesisTol = 1e-9;

FockOperator fswap_operator(int j, int n) {
  const FockOperator aj = annihilator(j, n);
  const FockOperator ak = annihilator(j + 1, n);
  return identity_operator(n) - aj.adjoint() * aj - ak.adjoint() * ak +
         ak.adjoint() * aj + aj.adjoint() * ak;
}

Matrix hadamard() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::numbers::sqrt2;
}

Matrix controlled(const Matrix& u) {
  const Eigen::Index d = u.rows();
  Matrix c = Matrix::Identity(2 * d, 2 * d);
  c.bottomRightCorner(d, d) = u;
  return c;
}

Matrix from_permutation(int bits, const std::function<std::vector<int>(const std::vector<int>&)>& f) {
  const std::size_t dim = std::size_t{1} << bits;
  std::vector<std::size_t> image(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::vector<int> s(static_cast<std::size_t>(bits));
    for (int k = 0; k < bits; ++k) s[k] = static_cast<int>((x >> (bits - 1 - k)) & 1u);
    const std::vector<int> t = f(s);
    std::size_t y = 0;
    for (int b : t) y = (y << 1) | static_cast<std::size_t>(b);
    image[x] = y;
  }
  return permutation_matrix(image);
}

double wrap_angle(double theta) {
  theta = std::fmod(theta, 2.0 * kPi);
  if (theta < 0.0) theta += 2.0 * kPi;
  if (2.0 * kPi - theta < kAngleTol) theta = 0.0;
  return theta;
}

void emit_phase(std::vector<Gate>& out, int wire, double theta) {
  theta = wrap_angle(theta);
  if (theta < kAngleTol) return;
  const double eighths = theta / (kPi / 4.0);
  const double rounded = std::round(eighths);
  if (std::abs(eighths - rounded) < 1e-12) {
    for (int k = 0; k < static_cast<int>(rounded); ++k) {
      out.push_back(make_gate(GateKind::kLambdaPhase, {wire}));
    }
    return;
  }
  out.push_back(make_gate(GateKind::kPhase, {wire}, theta));
}

void emit_cphase(std::vector<Gate>& out, int a, int b, double theta) {
  theta = wrap_angle(theta);
  if (theta < kAngleTol) return;
  if (std::abs(theta - kPi) < kAngleTol) {
    out.push_back(make_gate(GateKind::kLambdaZ, {a, b}));
    return;
  }
  out.push_back(make_gate(GateKind::kCPhase, {a, b}, theta));
}

// ppext(G) on (a, b) for a single-qubit unitary G, via G ~ Rz Ry Rz and
// Ry(beta) = Rz(pi/2) H Rz(beta) H Rz(-pi/2). Global phase is fixed later.
void emit_extension(std::vector<Gate>& out, const Matrix& g, int a, int b) {
  const Complex det = g.determinant();
  const Matrix su = g / std::sqrt(det);
  const double ca = std::abs(su(0, 0));
  const double sb = std::abs(su(1, 0));
  const double beta = 2.0 * std::atan2(sb, ca);
  double alpha = 0.0, delta = 0.0;
  if (sb < 1e-14) {
    alpha = -2.0 * std::arg(su(0, 0));
  } else if (ca < 1e-14) {
    alpha = 2.0 * std::arg(su(1, 0));
  } else {
    const double sum = -2.0 * std::arg(su(0, 0));
    const double diff = 2.0 * std::arg(su(1, 0));
    alpha = 0.5 * (sum + diff);
    delta = 0.5 * (sum - diff);
  }
  // Time order: Rz(delta - pi/2), H, Rz(beta), H, Rz(alpha + pi/2), with
  // Rz(t) equal to phase(t) up to a global phase.
  if (std::abs(wrap_angle(beta)) < kAngleTol) {
    emit_phase(out, b, alpha + delta);
    return;
  }
  emit_phase(out, b, delta - kPi / 2.0);
  out.push_back(make_gate(GateKind::kHHat, {a, b}));
  emit_phase(out, b, beta);
  out.push_back(make_gate(GateKind::kHHat, {a, b}));
  emit_phase(out, b, alpha + kPi / 2.0);
}

// Gates act on wires a and one other wire.
Matrix local_unitary(const std::vector<Gate>& gates, int a) {
  Matrix u = Matrix::Identity(4, 4);
  for (const Gate& g : gates) {
    std::vector<int> local;
    for (int w : g.wires) local.push_back(w == a ? 0 : 1);
    apply_qubit_operator(u, gate_matrix(g), local, 2);
  }
  return u;
}

}  // namespace

Matrix fswap(int j, int n) {
  if (j < 1 || j >= n) throw std::invalid_argument("fswap needs 1 <= j < n");
  return fswap_operator(j, n).dense();
}

Matrix swap_defect(int j, int n) {
  if (j < 1 || j >= n) throw std::invalid_argument("swap_defect needs 1 <= j < n");
  const std::vector<int> wires = {j - 1, j};
  return embed_qubit_operator(gate_matrix(make_gate(GateKind::kSwapDefect, wires)), wires, n);
}

Matrix qswap(int j, int n) {
  if (j < 1 || j >= n) throw std::invalid_argument("qswap needs 1 <= j < n");
  const std::vector<int> wires = {j - 1, j};
  return embed_qubit_operator(gate_matrix(make_gate(GateKind::kQSwap, wires)), wires, n);
}

RoutedGate route_nearest_neighbor(const Matrix& local, int j, int k, int n) {
  check_mode_count(n);
  if (j < 1 || k <= j || k > n) throw std::invalid_argument("routing needs 1 <= j < k <= n");
  if (local.rows() != 4 || local.cols() != 4) {
    throw std::invalid_argument("routing expects a two-mode gate");
  }
  const int parity = operator_parity(local, 2, 2);
  if (parity < 0) throw std::invalid_argument("gate has no definite parity");
  RoutedGate r;
  r.mode_circuit.wire_type = WireType::kMode;
  r.mode_circuit.n_wires = n;
  r.qubit_circuit.wire_type = WireType::kQubit;
  r.qubit_circuit.n_wires = n;
  const auto add_fswap = [&](int a) {  // modes a, a+1, 1-based
    r.mode_circuit.gates.push_back(make_gate(GateKind::kFSwap, {a - 1, a}));
    r.qubit_circuit.gates.push_back(make_gate(GateKind::kSwapDefect, {a - 1, a}));
    r.qubit_circuit.gates.push_back(make_gate(GateKind::kQSwap, {a - 1, a}));
  };
  for (int a = k - 1; a > j; --a) add_fswap(a);
  r.mode_circuit.gates.push_back(make_custom({j - 1, j}, local));
  if (parity == 0) {
    r.qubit_circuit.gates.push_back(make_custom({j - 1, j}, local));
  } else {
    // An odd gate carries the parity string of the modes before j.
    std::vector<int> wires(static_cast<std::size_t>(j + 1));
    std::iota(wires.begin(), wires.end(), 0);
    const std::vector<int> pair = {j, j + 1};
    r.qubit_circuit.gates.push_back(
        make_custom(wires, embed_field_operator(local, pair, j + 1)));
  }
  for (int a = j + 1; a < k; ++a) add_fswap(a);
  return r;
}

Matrix parity_embedding(int m) {
  if (m < 1 || m > kMaxDenseModes) throw std::invalid_argument("V_m needs 1 <= m <= 10");
  return from_permutation(m, [](const std::vector<int>& s) {
    std::vector<int> t = s;
    t[0] = std::accumulate(s.begin(), s.end(), 0) % 2;
    return t;
  });
}

Matrix parity_preserving_extension(const Matrix& g) {
  if (g.rows() != g.cols() || g.rows() < 2 || (g.rows() & (g.rows() - 1))) {
    throw std::invalid_argument("extension needs a square 2^k matrix");
  }
  if (unitarity_residual(g) > 1e-10) {
    throw std::invalid_argument("extension needs a unitary gate");
  }
  int k = 0;
  while ((Eigen::Index{1} << k) < g.rows()) ++k;
  const Matrix v = parity_embedding(k + 1);
  return v * kron(Matrix::Identity(2, 2), g) * v;
}

double UniversalSetResiduals::max() const {
  return std::max({lambda_phase, lambda_z, g_exponential, g_split, h_from_g, h_extension});
}

std::vector<UniversalGate> universal_set(WireType wire_type) {
  std::vector<UniversalGate> out;
  if (wire_type == WireType::kQubit) {
    out.push_back({"lambda_phase", 1, gate_matrix(make_gate(GateKind::kLambdaPhase, {0}))});
    out.push_back({"lambda_z", 2, gate_matrix(make_gate(GateKind::kLambdaZ, {0, 1}))});
    out.push_back({"h_hat", 2, parity_preserving_extension(hadamard())});
    return out;
  }
  const FockOperator a0 = annihilator(1, 2);
  const FockOperator a1 = annihilator(2, 2);
  const Matrix n0 = (a0.adjoint() * a0).dense();
  const Matrix n1 = (a1.adjoint() * a1).dense();
  // (phi_0 - phi_0^dag)(phi_1 + phi_1^dag) is Hermitian.
  const Matrix mixed = ((a0 - a0.adjoint()) * (a1 + a1.adjoint())).dense();
  out.push_back({"lambda_phase", 1,
                 expi_hermitian((annihilator(1, 1).adjoint() * annihilator(1, 1)).dense(),
                                kPi / 4.0)});
  out.push_back({"lambda_z", 2, expi_hermitian(n0 * n1, kPi)});
  out.push_back({"g_hat", 2, expi_hermitian(mixed, -kPi / 4.0)});
  out.push_back({"x", 1, (annihilator(1, 1) + annihilator(1, 1).adjoint()).dense()});
  return out;
}

UniversalSetResiduals universal_set_identities() {
  UniversalSetResiduals r;
  const auto modes = universal_set(WireType::kMode);
  const auto qubits = universal_set(WireType::kQubit);
  const Matrix g_hat = gate_matrix(make_gate(GateKind::kGHat, {0, 1}));
  r.lambda_phase = max_abs(modes[0].matrix - qubits[0].matrix);
  r.lambda_z = max_abs(modes[1].matrix - qubits[1].matrix);
  r.g_exponential = max_abs(modes[2].matrix - g_hat);

  const FockOperator a0 = annihilator(1, 2);
  const FockOperator a1 = annihilator(2, 2);
  const Matrix hopping = (a0.adjoint() * a1 + a1.adjoint() * a0).dense();
  const Matrix pairing = (a1 * a0 + a0.adjoint() * a1.adjoint()).dense();
  r.g_split = max_abs(modes[2].matrix - expi_hermitian(hopping, kPi / 4.0) *
                                            expi_hermitian(pairing, kPi / 4.0));

  const Matrix lambda_minus_i =
      kron(Matrix::Identity(2, 2),
           Eigen::Vector2cd(1.0, Complex(0.0, -1.0)).asDiagonal().toDenseMatrix());
  const Matrix h_hat = gate_matrix(make_gate(GateKind::kHHat, {0, 1}));
  r.h_from_g = max_abs(h_hat - lambda_minus_i * modes[2].matrix * lambda_minus_i);
  r.h_extension = max_abs(h_hat - qubits[2].matrix);
  return r;
}

Matrix z_permutation(int m) {
  if (m < 1 || m >= kMaxDenseModes) throw std::invalid_argument("Z needs 1 <= m < 10");
  return from_permutation(m + 1, [m](const std::vector<int>& s) {
    std::vector<int> t = s;
    int head = 0, tail = 0;
    for (int k = 0; k < m; ++k) head ^= s[k];
    for (int k = 1; k <= m; ++k) tail ^= s[k];
    t[0] = head;
    t[m] = tail;
    return t;
  });
}

Circuit synthesize_Z(int m, bool expand) {
  if (m < 1 || m >= kMaxDenseModes) throw std::invalid_argument("Z needs 1 <= m < 10");
  Circuit c;
  c.wire_type = WireType::kQubit;
  c.n_wires = m + 1;
  for (int j = m - 1; j >= 1; --j) {
    if (expand) {
      // Control j, targets 0 and m: H-hat on (0, m) conjugates CZ(j, m).
      c.gates.push_back(make_gate(GateKind::kHHat, {0, m}));
      c.gates.push_back(make_gate(GateKind::kLambdaZ, {j, m}));
      c.gates.push_back(make_gate(GateKind::kHHat, {0, m}));
    } else {
      c.gates.push_back(make_gate(GateKind::kLambdaXHat, {j, 0, m}));
    }
  }
  return c;
}

KCorrector k_corrector_identity(int m) {
  if (m < 2 || m >= kMaxDenseModes) throw std::invalid_argument("K corrector needs 2 <= m < 10");
  const Matrix z = z_permutation(m);
  // P moves the ancilla (last) to the second position.
  const Matrix p = from_permutation(m + 1, [m](const std::vector<int>& s) {
    std::vector<int> t;
    t.push_back(s[0]);
    t.push_back(s[m]);
    for (int k = 1; k < m; ++k) t.push_back(s[k]);
    return t;
  });
  const Matrix h_hat = gate_matrix(make_gate(GateKind::kHHat, {0, 1}));
  const Eigen::Index rest = Eigen::Index{1} << (m - 2);
  const Matrix middle = kron(controlled(h_hat), Matrix::Identity(rest, rest));
  const Matrix lhs = z.adjoint() * p.adjoint() * middle * p * z;

  const Matrix v = parity_embedding(m);
  KCorrector out;
  out.k = v.adjoint() * kron(controlled(hadamard()), Matrix::Identity(rest, rest)) * v;
  out.residual = max_abs(lhs - kron(out.k, Matrix::Identity(2, 2)));

  std::vector<Eigen::Index> even, odd;
  for (Eigen::Index x = 0; x < out.k.rows(); ++x) {
    (parity_of_index(static_cast<std::size_t>(x)) ? odd : even).push_back(x);
  }
  const auto half = static_cast<Eigen::Index>(even.size());
  out.w0 = Matrix(half, half);
  out.w1 = Matrix(half, half);
  for (Eigen::Index a = 0; a < half; ++a) {
    for (Eigen::Index b = 0; b < half; ++b) {
      out.w0(a, b) = out.k(even[a], even[b]);
      out.w1(a, b) = out.k(odd[a], odd[b]);
    }
  }
  return out;
}

std::vector<Gate> synthesize_parity_preserving(const Matrix& u, int a, int b,
                                               double& global_phase) {
  if (u.rows() != 4 || u.cols() != 4 || unitarity_residual(u) > 1e-9) {
    throw std::invalid_argument("expected a two-qubit unitary");
  }
  if (operator_parity(u, 2, 2, 1e-12) != 0) {
    throw std::invalid_argument("gate is not parity preserving");
  }
  std::vector<Gate> out;
  // Diagonal gates need no basis change.
  if (max_abs(Matrix(u - Matrix(u.diagonal().asDiagonal()))) < 1e-14) {
    const double d00 = std::arg(u(0, 0)), d01 = std::arg(u(1, 1));
    const double d10 = std::arg(u(2, 2)), d11 = std::arg(u(3, 3));
    emit_phase(out, a, d10 - d00);
    emit_phase(out, b, d01 - d00);
    emit_cphase(out, a, b, d11 - d10 - d01 + d00);
  } else {
    // With the parity moved into the first qubit the gate is block diagonal:
    // C = |0><0| (x) A0 + |1><1| (x) A1 = (I (x) A0 Q) Lambda(D) (I (x) Q^dag)
    // where A0^dag A1 = Q D Q^dag.
    const Matrix v = parity_embedding(2);
    const Matrix c = v * u * v;
    const Matrix a0 = c.topLeftCorner(2, 2);
    const Matrix a1 = c.bottomRightCorner(2, 2);
    Eigen::ComplexSchur<Matrix> schur(a0.adjoint() * a1);
    const Matrix q = schur.matrixU();
    const double l0 = std::arg(schur.matrixT()(0, 0));
    const double l1 = std::arg(schur.matrixT()(1, 1));
    emit_extension(out, q.adjoint(), a, b);
    // Pulled back through V, Lambda(D) is phase(l0) on a, phase(l1) on b and
    // a controlled phase of -(l0 + l1).
    emit_phase(out, a, l0);
    emit_phase(out, b, l1);
    emit_cphase(out, a, b, -(l0 + l1));
    emit_extension(out, a0 * q, a, b);
  }
  const PhaseAlignment fit = align_global_phase(u, local_unitary(out, a));
  if (fit.residual > kSynthesisTol) {
    throw std::runtime_error("parity-preserving synthesis failed, residual " +
                             std::to_string(fit.residual));
  }
  global_phase += fit.phase;
  return out;
}

namespace {

// X on mode wire w is the parity string on the wires before w followed by X.
void emit_mode_x(std::vector<Gate>& out, int w) {
  for (int q = 0; q < w; ++q) emit_phase(out, q, kPi);
  out.push_back(make_gate(GateKind::kX, {w}));
}

void emit_fswap(std::vector<Gate>& out, int a) {
  out.push_back(make_gate(GateKind::kSwapDefect, {a, a + 1}));
  out.push_back(make_gate(GateKind::kQSwap, {a, a + 1}));
}

Matrix local_x_first() {
  return kron(gate_matrix(make_gate(GateKind::kX, {0})), Matrix::Identity(2, 2));
}

void compile_one_mode(std::vector<Gate>& out, double& phase, const Matrix& g, int w) {
  const int parity = operator_parity(g, 1, 1, 1e-12);
  if (parity < 0) throw std::invalid_argument("single-mode gate has no definite parity");
  const Matrix x = gate_matrix(make_gate(GateKind::kX, {0}));
  const Matrix even = parity == 1 ? Matrix(x * g) : g;
  if (std::abs(even(0, 1)) > 1e-12 || std::abs(even(1, 0)) > 1e-12) {
    throw std::invalid_argument("single-mode gate is not unitary up to parity");
  }
  phase += std::arg(even(0, 0));
  emit_phase(out, w, std::arg(even(1, 1)) - std::arg(even(0, 0)));
  if (parity == 1) emit_mode_x(out, w);
}

void compile_two_mode(std::vector<Gate>& out, double& phase, const Matrix& g,
                      int m1, int m2) {
  const int parity = operator_parity(g, 2, 2, 1e-12);
  if (parity < 0) throw std::invalid_argument("two-mode gate has no definite parity");
  // g = X_{m1} R with R even.
  Matrix r = parity == 1 ? Matrix(local_x_first() * g) : g;
  int lo = m1, hi = m2;
  if (m1 > m2) {
    const Matrix f = gate_matrix(make_gate(GateKind::kFSwap, {0, 1}));
    r = f * r * f;
    std::swap(lo, hi);
  }
  const bool diagonal = max_abs(Matrix(r - Matrix(r.diagonal().asDiagonal()))) < 1e-14;
  if (diagonal) {
    // Even diagonal gates carry no strings, so they act in place.
    auto gates = synthesize_parity_preserving(r, lo, hi, phase);
    out.insert(out.end(), gates.begin(), gates.end());
  } else {
    for (int a = hi - 1; a > lo; --a) emit_fswap(out, a);
    auto gates = synthesize_parity_preserving(r, lo, lo + 1, phase);
    out.insert(out.end(), gates.begin(), gates.end());
    for (int a = lo + 1; a < hi; ++a) emit_fswap(out, a);
  }
  if (parity == 1) emit_mode_x(out, m1);
}

}  // namespace

CompileResult compile_fqt_circuit(const Circuit& modes) {
  modes.validate();
  if (modes.wire_type != WireType::kMode) {
    throw std::invalid_argument("compile_fqt_circuit expects a mode circuit");
  }
  CompileResult result;
  Circuit& qc = result.qubit_circuit;
  qc.wire_type = WireType::kQubit;
  qc.n_wires = modes.n_wires;
  qc.global_phase = modes.global_phase;
  for (const Gate& g : modes.gates) {
    const auto& w = g.wires;
    const bool adjacent = w.size() == 2 && w[1] == w[0] + 1;
    switch (g.kind) {
      case GateKind::kLambdaPhase:
        qc.gates.push_back(make_gate(GateKind::kLambdaPhase, {w[0]}));
        continue;
      case GateKind::kLambdaZ:
      case GateKind::kSwapDefect:
        qc.gates.push_back(make_gate(GateKind::kLambdaZ, {w[0], w[1]}));
        continue;
      case GateKind::kX:
        emit_mode_x(qc.gates, w[0]);
        continue;
      case GateKind::kFSwap:
        if (adjacent) {
          emit_fswap(qc.gates, w[0]);
          continue;
        }
        break;
      case GateKind::kHHat:
        if (adjacent) {
          qc.gates.push_back(make_gate(GateKind::kHHat, {w[0], w[1]}));
          continue;
        }
        break;
      case GateKind::kGHat:
        if (adjacent) {
          qc.gates.push_back(make_gate(GateKind::kLambdaPhase, {w[1]}));
          qc.gates.push_back(make_gate(GateKind::kLambdaPhase, {w[1]}));
          qc.gates.push_back(make_gate(GateKind::kHHat, {w[0], w[1]}));
          qc.gates.push_back(make_gate(GateKind::kLambdaPhase, {w[1]}));
          qc.gates.push_back(make_gate(GateKind::kLambdaPhase, {w[1]}));
          continue;
        }
        break;
      default:
        break;
    }
    const Matrix local = gate_matrix(g);
    if (unitarity_residual(local) > 1e-9) {
      throw std::invalid_argument(to_string(g.kind) + " gate is not unitary");
    }
    if (w.size() == 1) {
      compile_one_mode(qc.gates, qc.global_phase, local, w[0]);
    } else if (w.size() == 2) {
      compile_two_mode(qc.gates, qc.global_phase, local, w[0], w[1]);
    } else {
      throw std::invalid_argument("mode gates on more than two modes are not compiled");
    }
  }
  qc.global_phase = wrap_angle(qc.global_phase);
  result.gate_counts = qc.gate_counts();
  if (modes.n_wires <= kMaxDenseModes) {
    result.residual = max_abs(Matrix(circuit_unitary(qc) - circuit_unitary(modes)));
  }
  return result;
}

}  // namespace fermsim
