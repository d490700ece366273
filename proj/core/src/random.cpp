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

#include "fermsim/random.hpp"

#include <stdexcept>

#include "fermsim/fock_core.hpp"

namespace fermsim {

Matrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

Matrix random_unitary(Eigen::Index d, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_ginibre(d, d, rng));
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

Matrix random_density(Eigen::Index d, Rng& rng, Eigen::Index rank) {
  if (rank <= 0 || rank > d) rank = d;
  const Matrix g = random_ginibre(d, rank, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Vector random_unit_vector(Eigen::Index d, Rng& rng) {
  Vector v = random_ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

namespace {

std::vector<Eigen::Index> sector_indices(int n, int sector) {
  std::vector<Eigen::Index> out;
  const std::size_t dim = fock_dimension(n);
  for (std::size_t x = 0; x < dim; ++x) {
    if (parity_of_index(x) == sector) out.push_back(static_cast<Eigen::Index>(x));
  }
  return out;
}

}  // namespace

Matrix random_fqt_state(int n, Rng& rng, int pure_sector) {
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  const Eigen::Index half = dim / 2;
  double p0 = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (pure_sector == 0) p0 = 1.0;
  if (pure_sector == 1) p0 = 0.0;
  std::uniform_int_distribution<Eigen::Index> rank_dist(1, half);
  const Matrix b0 = random_density(half, rng, rank_dist(rng)) * p0;
  const Matrix b1 = random_density(half, rng, rank_dist(rng)) * (1.0 - p0);
  Matrix rho = Matrix::Zero(dim, dim);
  const auto even = sector_indices(n, 0);
  const auto odd = sector_indices(n, 1);
  for (Eigen::Index a = 0; a < half; ++a) {
    for (Eigen::Index b = 0; b < half; ++b) {
      rho(even[a], even[b]) = b0(a, b);
      rho(odd[a], odd[b]) = b1(a, b);
    }
  }
  return rho;
}

Vector random_fqt_pure_state(int n, Rng& rng, int sector) {
  if (sector != 0 && sector != 1) throw std::invalid_argument("sector must be 0 or 1");
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  const auto idx = sector_indices(n, sector);
  const Vector c = random_unit_vector(static_cast<Eigen::Index>(idx.size()), rng);
  Vector v = Vector::Zero(dim);
  for (std::size_t k = 0; k < idx.size(); ++k) v(idx[k]) = c(static_cast<Eigen::Index>(k));
  return v;
}

Matrix random_parity_operator(int n_in, int n_out, int parity, Rng& rng) {
  const auto din = static_cast<Eigen::Index>(fock_dimension(n_in));
  const auto dout = static_cast<Eigen::Index>(fock_dimension(n_out));
  Matrix m = random_ginibre(dout, din, rng);
  for (Eigen::Index r = 0; r < dout; ++r) {
    for (Eigen::Index c = 0; c < din; ++c) {
      const int p = parity_of_index(static_cast<std::size_t>(r)) ^
                    parity_of_index(static_cast<std::size_t>(c));
      if (p != parity) m(r, c) = 0.0;
    }
  }
  return m;
}

}  // namespace fermsim
