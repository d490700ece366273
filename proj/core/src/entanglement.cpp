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

#include "fermsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fermsim/fock_core.hpp"
#include "fermsim/linalg.hpp"
#include "fermsim/superselection.hpp"

namespace fermsim {

namespace {

void check_two_mode(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::invalid_argument("expected a two-mode (4x4) state");
  }
}

Matrix yy() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 3) = -1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 0) = -1.0;
  return m;
}

// Embeds a normalized sector block of a two-mode state back into 4x4.
Matrix pad_sector(const Matrix& block, int sector) {
  const auto& perm = sector_permutation(2);
  Matrix out = Matrix::Zero(4, 4);
  for (Eigen::Index a = 0; a < 2; ++a) {
    for (Eigen::Index b = 0; b < 2; ++b) {
      out(static_cast<Eigen::Index>(perm[2 * sector + a]),
          static_cast<Eigen::Index>(perm[2 * sector + b])) = block(a, b);
    }
  }
  return out;
}

SectorMeasure sector_measure(const Matrix& rho, double tol, bool eof) {
  check_two_mode(rho);
  const ValidityReport v = is_valid_fqt_state(rho, 2, tol);
  if (!v.valid) throw std::invalid_argument("not a valid FQT state: " + v.reason);
  const double tr = v.trace;
  if (tr <= tol) throw std::invalid_argument("state has zero trace");
  const SectorSplit split = split_sectors(rho / tr, 2, tol);
  SectorMeasure m;
  m.p0 = split.p0;
  m.p1 = split.p1;
  if (m.p0 > tol) m.c0 = wootters_concurrence(pad_sector(split.rho0, 0), tol);
  if (m.p1 > tol) m.c1 = wootters_concurrence(pad_sector(split.rho1, 1), tol);
  if (eof) {
    m.value = m.p0 * eof_from_concurrence(m.c0) + m.p1 * eof_from_concurrence(m.c1);
  } else {
    m.value = m.p0 * m.c0 + m.p1 * m.c1;
  }
  return m;
}

}  // namespace

double wootters_concurrence(const Matrix& rho_in, double tol) {
  check_two_mode(rho_in);
  if (hermiticity_residual(rho_in) > tol) {
    throw std::invalid_argument("concurrence: input is not Hermitian");
  }
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho_in);
  if (ev(0) < -tol) throw std::invalid_argument("concurrence: input is not PSD");
  const double tr = rho_in.trace().real();
  if (tr <= tol) throw std::invalid_argument("concurrence: zero trace");
  const Matrix rho = rho_in / tr;
  // rho = W W^dag from the eigenvectors with non-negligible weight; the lambdas
  // are the singular values of W^T (Y (x) Y) W.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho);
  const double floor = 1e-14 * std::max(1.0, eig.eigenvalues().maxCoeff());
  Matrix w = Matrix::Zero(4, 4);
  for (Eigen::Index k = 0; k < 4; ++k) {
    const double p = eig.eigenvalues()(k);
    if (p > floor) w.col(k) = std::sqrt(p) * eig.eigenvectors().col(k);
  }
  const Matrix tau = w.transpose() * yy() * w;
  Eigen::VectorXd lam = Eigen::JacobiSVD<Matrix>(tau).singularValues();
  std::sort(lam.data(), lam.data() + lam.size(), std::greater<double>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  if (c < 0.0 || c > 1.0 + 1e-12) {
    throw std::invalid_argument("concurrence outside [0, 1]");
  }
  c = std::min(c, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

SectorMeasure fermionic_concurrence(const Matrix& rho, double tol) {
  return sector_measure(rho, tol, false);
}

SectorMeasure fermionic_eof_lower(const Matrix& rho, double tol) {
  return sector_measure(rho, tol, true);
}

SeparabilityResult full_separability_test(const Matrix& rho, int n, double tol) {
  const ValidityReport v = is_valid_fqt_state(rho, n, tol);
  if (!v.valid) throw std::invalid_argument("not a valid FQT state: " + v.reason);
  SeparabilityResult r;
  Eigen::Index bi = 0, bj = 0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      if (i != j && std::abs(rho(i, j)) > r.witness) {
        r.witness = std::abs(rho(i, j));
        bi = i;
        bj = j;
      }
    }
  }
  r.separable = r.witness <= tol;
  if (!r.separable) {
    r.detail = "coherence between |" + to_string(occupation_of(static_cast<std::size_t>(bi), n)) +
               "> and |" + to_string(occupation_of(static_cast<std::size_t>(bj), n)) + ">";
  }
  return r;
}

SeparabilityResult bipartite_sector_separability(const Matrix& rho, double tol) {
  check_two_mode(rho);
  const ValidityReport v = is_valid_fqt_state(rho, 2, tol);
  if (!v.valid) throw std::invalid_argument("not a valid FQT state: " + v.reason);
  SeparabilityResult r;
  const Matrix z1 = Eigen::Vector4d(1, 1, -1, -1).cast<Complex>().asDiagonal();
  const Matrix z2 = Eigen::Vector4d(1, -1, 1, -1).cast<Complex>().asDiagonal();
  const double local = std::max(commutator_residual(rho, z1), commutator_residual(rho, z2));
  if (local > tol) {
    r.witness = local;
    r.detail = "does not commute with a local parity";
    return r;
  }
  const SectorSplit split = split_sectors(rho, 2, tol);
  for (int sector = 0; sector < 2; ++sector) {
    const double p = sector == 0 ? split.p0 : split.p1;
    if (p <= tol) continue;
    const Matrix block = pad_sector(sector == 0 ? split.rho0 : split.rho1, sector);
    const double min_ev = hermitian_eigenvalues(partial_transpose_second(block))(0);
    if (min_ev < -tol) {
      r.witness = -min_ev;
      r.detail = "sector " + std::to_string(sector) + " block fails partial transpose";
      return r;
    }
  }
  r.separable = true;
  return r;
}

std::string to_string(MesClass c) {
  switch (c) {
    case MesClass::kEven: return "MES_0";
    case MesClass::kOdd: return "MES_1";
    case MesClass::kNone: break;
  }
  return "none";
}

MesClass mes_membership(const Vector& psi, double floor) {
  if (psi.size() != 4) throw std::invalid_argument("expected a two-mode vector");
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("state vector is not normalized");
  }
  const auto present = [&](Eigen::Index k) { return std::abs(psi(k)) > floor; };
  const bool even = present(0) || present(3);
  const bool odd = present(1) || present(2);
  if (even && odd) {
    throw std::invalid_argument("superposition across parity sectors");
  }
  if (present(0) && present(3)) return MesClass::kEven;
  if (present(1) && present(2)) return MesClass::kOdd;
  return MesClass::kNone;
}

MesClass mes_membership(const Matrix& rho, double floor) {
  check_two_mode(rho);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (rho + rho.adjoint()));
  const Eigen::VectorXd ev = solver.eigenvalues();
  const double total = ev.sum();
  if (total <= 0.0 || ev(2) / total > 1e-9 || ev(0) < -1e-9) {
    throw std::invalid_argument("mes_membership: input is not a pure state");
  }
  return mes_membership(Vector(solver.eigenvectors().col(3)), floor);
}

MonogamyResult monogamy_witness(const Matrix& rho, double tol) {
  if (rho.rows() != 8 || rho.cols() != 8) {
    throw std::invalid_argument("monogamy witness needs a three-mode state");
  }
  const ValidityReport v = is_valid_fqt_state(rho, 3, tol);
  if (!v.valid) throw std::invalid_argument("not a valid FQT state: " + v.reason);
  const std::vector<int> ab = {1, 2};
  const std::vector<int> ac = {1, 3};
  MonogamyResult r;
  r.c_ab = fermionic_concurrence(partial_trace(rho, ab, 3), tol).value;
  r.c_ac = fermionic_concurrence(partial_trace(rho, ac, 3), tol).value;
  r.sum_of_squares = r.c_ab * r.c_ab + r.c_ac * r.c_ac;
  r.exceeds_ckw = r.sum_of_squares > 1.0 + tol;
  return r;
}

}  // namespace fermsim
