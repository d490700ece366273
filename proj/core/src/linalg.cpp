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

#include "fermsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fermsim {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const SparseMatrix& m) {
  double best = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      best = std::max(best, std::abs(it.value()));
    }
  }
  return best;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix kron_all(std::span<const Matrix> factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (const Matrix& f : factors) out = kron(out, f);
  return out;
}

double hermiticity_residual(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(m - m.adjoint());
}

double unitarity_residual(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

double commutator_residual(const Matrix& a, const Matrix& b) {
  return max_abs(a * b - b * a);
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix expi_hermitian(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  Vector phases(solver.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, t * solver.eigenvalues()(k));
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

Matrix sqrt_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
  Eigen::VectorXd ev = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * ev.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

PhaseAlignment align_global_phase(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("align_global_phase: shape mismatch");
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  PhaseAlignment out;
  if (std::abs(b(r, c)) == 0.0) {
    out.residual = max_abs(a);
    return out;
  }
  out.phase = std::arg(a(r, c) / b(r, c));
  out.residual = max_abs(a - std::polar(1.0, out.phase) * b);
  return out;
}

Matrix partial_transpose_second(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("partial_transpose_second: expected 4x4");
  }
  Matrix out(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
  return out;
}

Matrix permutation_matrix(std::span<const std::size_t> image) {
  const auto d = static_cast<Eigen::Index>(image.size());
  Matrix p = Matrix::Zero(d, d);
  for (Eigen::Index x = 0; x < d; ++x) {
    p(static_cast<Eigen::Index>(image[x]), x) = 1.0;
  }
  return p;
}

namespace {

void check_wires(std::span<const int> wires, int n, Eigen::Index local_dim) {
  if (n < 1 || n > 24) throw std::invalid_argument("qubit count out of range");
  if ((Eigen::Index{1} << wires.size()) != local_dim) {
    throw std::invalid_argument("gate dimension does not match wire count");
  }
  for (std::size_t a = 0; a < wires.size(); ++a) {
    if (wires[a] < 0 || wires[a] >= n) {
      throw std::invalid_argument("wire index out of range");
    }
    for (std::size_t b = a + 1; b < wires.size(); ++b) {
      if (wires[a] == wires[b]) throw std::invalid_argument("repeated wire");
    }
  }
}

std::size_t local_index(std::size_t x, std::span<const int> wires, int n) {
  std::size_t out = 0;
  for (int w : wires) out = (out << 1) | ((x >> (n - 1 - w)) & 1u);
  return out;
}

std::size_t with_local(std::size_t x, std::size_t local,
                       std::span<const int> wires, int n) {
  const int k = static_cast<int>(wires.size());
  for (int a = 0; a < k; ++a) {
    const std::size_t bit = std::size_t{1} << (n - 1 - wires[a]);
    if ((local >> (k - 1 - a)) & 1u) {
      x |= bit;
    } else {
      x &= ~bit;
    }
  }
  return x;
}

}  // namespace

Matrix embed_qubit_operator(const Matrix& local, std::span<const int> wires,
                            int n) {
  check_wires(wires, n, local.rows());
  const std::size_t dim = std::size_t{1} << n;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t lx = local_index(x, wires, n);
    for (Eigen::Index ly = 0; ly < local.rows(); ++ly) {
      const Complex v = local(ly, static_cast<Eigen::Index>(lx));
      if (v == Complex{}) continue;
      const std::size_t y = with_local(x, static_cast<std::size_t>(ly), wires, n);
      out(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += v;
    }
  }
  return out;
}

void apply_qubit_operator(Matrix& u, const Matrix& local,
                          std::span<const int> wires, int n) {
  check_wires(wires, n, local.rows());
  const std::size_t dim = std::size_t{1} << n;
  if (static_cast<std::size_t>(u.rows()) != dim) {
    throw std::invalid_argument("apply_qubit_operator: register mismatch");
  }
  const auto k = static_cast<std::size_t>(local.rows());
  std::size_t mask = 0;
  for (int w : wires) mask |= std::size_t{1} << (n - 1 - w);
  std::vector<std::size_t> rows(k);
  Matrix block(static_cast<Eigen::Index>(k), u.cols());
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < k; ++l) {
      rows[l] = with_local(base, l, wires, n);
      block.row(static_cast<Eigen::Index>(l)) =
          u.row(static_cast<Eigen::Index>(rows[l]));
    }
    const Matrix updated = local * block;
    for (std::size_t l = 0; l < k; ++l) {
      u.row(static_cast<Eigen::Index>(rows[l])) =
          updated.row(static_cast<Eigen::Index>(l));
    }
  }
}

int real_span_rank(std::span<const Matrix> family, double tol) {
  if (family.empty()) return 0;
  const Eigen::Index d = family.front().rows() * family.front().cols();
  RealMatrix stacked(2 * d, static_cast<Eigen::Index>(family.size()));
  for (std::size_t c = 0; c < family.size(); ++c) {
    const Matrix& m = family[c];
    for (Eigen::Index k = 0; k < d; ++k) {
      const Complex v = m.data()[k];
      stacked(k, static_cast<Eigen::Index>(c)) = v.real();
      stacked(d + k, static_cast<Eigen::Index>(c)) = v.imag();
    }
  }
  Eigen::ColPivHouseholderQR<RealMatrix> qr(stacked);
  qr.setThreshold(tol);
  return static_cast<int>(qr.rank());
}

}  // namespace fermsim
