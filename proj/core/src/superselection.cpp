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

#include "fermsim/superselection.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "fermsim/fock_core.hpp"
#include "fermsim/linalg.hpp"
#include "fermsim/random.hpp"

namespace fermsim {

const std::vector<std::size_t>& sector_permutation(int n) {
  check_mode_count(n);
  static std::array<std::once_flag, kMaxModes + 1> flags;
  static std::array<std::vector<std::size_t>, kMaxModes + 1> cache;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] {
    auto& perm = cache[static_cast<std::size_t>(n)];
    const std::size_t dim = fock_dimension(n);
    perm.reserve(dim);
    for (int sector = 0; sector < 2; ++sector) {
      for (std::size_t x = 0; x < dim; ++x) {
        if (parity_of_index(x) == sector) perm.push_back(x);
      }
    }
  });
  return cache[static_cast<std::size_t>(n)];
}

namespace {

void check_square(const Matrix& m, int n) {
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("matrix is not 2^n x 2^n for n = " +
                                std::to_string(n));
  }
}

Matrix parity_projector_dense(int n) {
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  Matrix p = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    p(x, x) = parity_of_index(static_cast<std::size_t>(x)) == 0 ? 1.0 : 0.0;
  }
  return p;
}

}  // namespace

SectorSplit split_sectors(const Matrix& rho, int n, double tol) {
  check_square(rho, n);
  if (hermiticity_residual(rho) > tol) {
    throw std::invalid_argument("split_sectors: input is not Hermitian");
  }
  const auto& perm = sector_permutation(n);
  const auto half = static_cast<Eigen::Index>(perm.size() / 2);
  Matrix sorted(rho.rows(), rho.cols());
  for (Eigen::Index a = 0; a < rho.rows(); ++a)
    for (Eigen::Index b = 0; b < rho.cols(); ++b)
      sorted(a, b) = rho(static_cast<Eigen::Index>(perm[a]),
                         static_cast<Eigen::Index>(perm[b]));
  SectorSplit out;
  const Matrix b0 = sorted.topLeftCorner(half, half);
  const Matrix b1 = sorted.bottomRightCorner(half, half);
  out.off_block_residual = std::max(max_abs(sorted.topRightCorner(half, half)),
                                    max_abs(sorted.bottomLeftCorner(half, half)));
  out.p0 = b0.trace().real();
  out.p1 = b1.trace().real();
  out.rho0 = std::abs(out.p0) > 0.0 ? Matrix(b0 / out.p0) : Matrix::Zero(half, half);
  out.rho1 = std::abs(out.p1) > 0.0 ? Matrix(b1 / out.p1) : Matrix::Zero(half, half);
  return out;
}

ValidityReport is_valid_fqt_state(const Matrix& rho, int n, double tol) {
  check_square(rho, n);
  ValidityReport r;
  r.hermiticity_residual = hermiticity_residual(rho);
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho);
  r.min_eigenvalue = ev(0);
  r.max_eigenvalue = ev(ev.size() - 1);
  r.trace = rho.trace().real();
  r.commutator_residual = commutator_residual(rho, parity_projector_dense(n));
  if (r.hermiticity_residual > tol) {
    r.reason = "not Hermitian";
  } else if (r.min_eigenvalue < -tol) {
    r.reason = "negative eigenvalue";
  } else if (r.trace > 1.0 + tol) {
    r.reason = "trace exceeds 1";
  } else if (r.commutator_residual > tol) {
    r.reason = "does not commute with parity";
  } else {
    r.valid = true;
  }
  return r;
}

ValidityReport is_valid_fqt_effect(const Matrix& a, int n, double tol) {
  check_square(a, n);
  ValidityReport r;
  r.hermiticity_residual = hermiticity_residual(a);
  const Eigen::VectorXd ev = hermitian_eigenvalues(a);
  r.min_eigenvalue = ev(0);
  r.max_eigenvalue = ev(ev.size() - 1);
  r.trace = a.trace().real();
  r.commutator_residual = commutator_residual(a, parity_projector_dense(n));
  if (r.hermiticity_residual > tol) {
    r.reason = "not Hermitian";
  } else if (r.min_eigenvalue < -tol) {
    r.reason = "negative eigenvalue";
  } else if (r.max_eigenvalue > 1.0 + tol) {
    r.reason = "eigenvalue exceeds 1";
  } else if (r.commutator_residual > tol) {
    r.reason = "does not commute with parity";
  } else {
    r.valid = true;
  }
  return r;
}

std::vector<Matrix> sector_hermitian_basis(int n) {
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  const auto& perm = sector_permutation(n);
  const std::size_t half = perm.size() / 2;
  std::vector<Matrix> out;
  for (int sector = 0; sector < 2; ++sector) {
    const std::size_t off = sector * half;
    for (std::size_t a = 0; a < half; ++a) {
      const auto x = static_cast<Eigen::Index>(perm[off + a]);
      Matrix diag = Matrix::Zero(dim, dim);
      diag(x, x) = 1.0;
      out.push_back(std::move(diag));
      for (std::size_t b = a + 1; b < half; ++b) {
        const auto y = static_cast<Eigen::Index>(perm[off + b]);
        Matrix re = Matrix::Zero(dim, dim);
        re(x, y) = 1.0;
        re(y, x) = 1.0;
        Matrix im = Matrix::Zero(dim, dim);
        im(x, y) = Complex(0.0, -1.0);
        im(y, x) = Complex(0.0, 1.0);
        out.push_back(std::move(re));
        out.push_back(std::move(im));
      }
    }
  }
  return out;
}

FqtDimension fqt_dimension(int n) {
  if (n < 1) throw std::invalid_argument("fqt_dimension: n must be >= 1");
  FqtDimension out;
  out.D = Count(1) << (2 * n - 1);
  out.V = Count(1) << (2 * n - 1);
  out.d = Count(1) << n;
  return out;
}

int sampled_state_space_rank(int n, std::uint64_t seed) {
  check_mode_count(n);
  Rng rng(seed);
  const auto target = fqt_dimension(n).D.convert_to<std::size_t>();
  std::vector<Matrix> family;
  for (std::size_t k = 0; k < target + 8; ++k) family.push_back(random_fqt_state(n, rng));
  return real_span_rank(family);
}

ConstraintBounds constraint_bounds(const Count& DA, const Count& VA,
                                   const Count& DB, const Count& VB,
                                   const Count& DAB) {
  if (DA < 1 || DB < 1 || DAB < 1 || VA < 0 || VB < 0) {
    throw std::invalid_argument("constraint_bounds: dimensions must be positive");
  }
  if (VA > DA || VB > DB) {
    throw std::invalid_argument("constraint_bounds: V exceeds D");
  }
  ConstraintBounds out;
  out.lower = DA * VB + DB * VA - 2 * VA * VB;
  out.upper = DA * VB + DB * VA - VA * VB + DAB - DA * DB;
  return out;
}

MinimalSuperselectionCheck check_minimal_superselection(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("system sizes must be >= 1");
  const auto qubit_d = [](int k) { return Count(1) << (2 * k); };
  const auto fqt_v = [&](int k) { return qubit_d(k) - fqt_dimension(k).D; };
  const ConstraintBounds b =
      constraint_bounds(qubit_d(n), fqt_v(n), qubit_d(m), fqt_v(m), qubit_d(n + m));
  MinimalSuperselectionCheck out;
  out.composite_v = fqt_v(n + m);
  out.lower_bound = b.lower;
  out.holds = out.composite_v == out.lower_bound;
  return out;
}

Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Count out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Count bilocal_effect_count(int n) {
  if (n < 1) throw std::invalid_argument("bilocal_effect_count: n must be >= 1");
  Count total = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    total += binomial(n, 2 * k) * (Count(1) << (n - 2 * k)) * (Count(1) << (2 * k));
  }
  return total;
}

JellyfishCheck jellyfish_dimension_check(const Count& DA, const Count& DB,
                                         const Count& DC, const Count& DD,
                                         const PairDimensions& p) {
  for (const Count* d : {&DA, &DB, &DC, &DD}) {
    if (*d < 1) throw std::invalid_argument("jellyfish: dimensions must be positive");
  }
  const auto tilde = [](const Count& dxy, const Count& dx, const Count& dy) {
    if (dxy < dx * dy) {
      throw std::invalid_argument("jellyfish: pair dimension below product");
    }
    return Count(dxy - dx * dy);
  };
  const Count tAB = tilde(p.AB, DA, DB);
  const Count tAC = tilde(p.AC, DA, DC);
  const Count tAD = tilde(p.AD, DA, DD);
  const Count tBC = tilde(p.BC, DB, DC);
  const Count tBD = tilde(p.BD, DB, DD);
  const Count tCD = tilde(p.CD, DC, DD);

  // Treat AB as one system and apply maximal bilocality to (AB)CD.
  const Count tABC = DA * tBC + DB * tAC;
  const Count tABD = DA * tBD + DB * tAD;
  JellyfishCheck out;
  out.iterated = p.AB * DC * DD + p.AB * tCD + DC * tABD + DD * tABC;
  out.classes = p.AD * DB * DC + DA * p.BC * DD + p.AC * DB * DD +
                DA * p.BD * DC + p.AB * p.CD - 4 * DA * DB * DC * DD;
  out.equal = out.iterated == out.classes;
  return out;
}

MaximalBilocalityCheck maximal_bilocality_check(int na, int nb, int nc) {
  const auto D = [](int k) { return fqt_dimension(k).D; };
  const auto tilde = [&](int x, int y) { return D(x + y) - D(x) * D(y); };
  MaximalBilocalityCheck out;
  out.composite = D(na + nb + nc);
  out.maxbil = D(na) * D(nb) * D(nc) + D(na) * tilde(nb, nc) +
               D(nb) * tilde(na, nc) + D(nc) * tilde(na, nb);
  out.holds = out.composite == out.maxbil;
  return out;
}

}  // namespace fermsim
