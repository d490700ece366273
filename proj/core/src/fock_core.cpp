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

#include "fermsim/fock_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "fermsim/linalg.hpp"

namespace fermsim {

namespace {

using Triplet = Eigen::Triplet<Complex>;

std::size_t mode_bit(int i, int n) { return std::size_t{1} << (n - i); }

void check_mode(int i, int n) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("mode index " + std::to_string(i) +
                                " outside 1.." + std::to_string(n));
  }
}

SparseMatrix from_triplets(std::size_t dim, const std::vector<Triplet>& t) {
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace

FockOperator::FockOperator(int n, SparseMatrix matrix)
    : n_(n), matrix_(std::move(matrix)) {
  check_mode_count(n);
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("FockOperator: matrix does not match 2^n");
  }
}

Matrix FockOperator::dense() const {
  if (n_ > kMaxDenseModes) {
    throw std::length_error("dense view limited to " +
                            std::to_string(kMaxDenseModes) + " modes");
  }
  return Matrix(matrix_);
}

FockOperator FockOperator::adjoint() const {
  return FockOperator(n_, SparseMatrix(matrix_.adjoint()));
}

FockOperator FockOperator::operator*(const FockOperator& other) const {
  if (other.n_ != n_) throw std::invalid_argument("mode count mismatch");
  return FockOperator(n_, SparseMatrix(matrix_ * other.matrix_));
}

FockOperator FockOperator::operator+(const FockOperator& other) const {
  if (other.n_ != n_) throw std::invalid_argument("mode count mismatch");
  return FockOperator(n_, SparseMatrix(matrix_ + other.matrix_));
}

FockOperator FockOperator::operator-(const FockOperator& other) const {
  if (other.n_ != n_) throw std::invalid_argument("mode count mismatch");
  return FockOperator(n_, SparseMatrix(matrix_ - other.matrix_));
}

FockOperator FockOperator::operator*(Complex scalar) const {
  return FockOperator(n_, SparseMatrix(matrix_ * scalar));
}

void check_mode_count(int n) {
  if (n < 1 || n > kMaxModes) {
    throw std::invalid_argument("mode count " + std::to_string(n) +
                                " outside 1.." + std::to_string(kMaxModes));
  }
}

std::size_t fock_dimension(int n) {
  check_mode_count(n);
  return std::size_t{1} << n;
}

std::size_t basis_index(const Occupation& s) {
  check_mode_count(static_cast<int>(s.size()));
  std::size_t x = 0;
  for (std::uint8_t bit : s) {
    if (bit > 1) throw std::invalid_argument("occupation entries must be 0 or 1");
    x = (x << 1) | bit;
  }
  return x;
}

Occupation occupation_of(std::size_t index, int n) {
  check_mode_count(n);
  if (index >= fock_dimension(n)) {
    throw std::out_of_range("basis index outside the Fock space");
  }
  Occupation s(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) s[i - 1] = (index & mode_bit(i, n)) ? 1 : 0;
  return s;
}

std::string to_string(const Occupation& s) {
  std::string out;
  out.reserve(s.size());
  for (std::uint8_t bit : s) out.push_back(bit ? '1' : '0');
  return out;
}

Occupation parse_occupation(std::string_view text) {
  Occupation s;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("occupation string must contain only 0/1");
    }
    s.push_back(c == '1' ? 1 : 0);
  }
  check_mode_count(static_cast<int>(s.size()));
  return s;
}

FockOperator identity_operator(int n) {
  const std::size_t dim = fock_dimension(n);
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setIdentity();
  return FockOperator(n, std::move(m));
}

FockOperator annihilator(int i, int n) {
  check_mode_count(n);
  check_mode(i, n);
  const std::size_t dim = fock_dimension(n);
  const std::size_t bit = mode_bit(i, n);
  const std::size_t before = ~(2 * bit - 1) & (dim - 1);
  std::vector<Triplet> t;
  t.reserve(dim / 2);
  for (std::size_t x = 0; x < dim; ++x) {
    if (!(x & bit)) continue;
    const double sign = (std::popcount(x & before) % 2) ? -1.0 : 1.0;
    t.emplace_back(static_cast<Eigen::Index>(x ^ bit),
                   static_cast<Eigen::Index>(x), sign);
  }
  return FockOperator(n, from_triplets(dim, t));
}

FockOperator creator(int i, int n) { return annihilator(i, n).adjoint(); }

FockOperator number_operator(int i, int n) {
  return creator(i, n) * annihilator(i, n);
}

FockOperator vacuum_projector(int n) {
  FockOperator out = identity_operator(n);
  for (int i = 1; i <= n; ++i) out = out * (annihilator(i, n) * creator(i, n));
  return out;
}

Vector fock_vector(const Occupation& s) {
  const int n = static_cast<int>(s.size());
  const std::size_t dim = fock_dimension(n);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(0) = 1.0;
  for (int i = n; i >= 1; --i) {
    if (s[i - 1] > 1) throw std::invalid_argument("occupation entries must be 0 or 1");
    if (s[i - 1]) v = creator(i, n).sparse() * v;
  }
  return v;
}

FockOperator parity_sign_operator(int n) {
  FockOperator out = identity_operator(n);
  for (int i = 1; i <= n; ++i) {
    out = out * (annihilator(i, n) * creator(i, n) -
                 creator(i, n) * annihilator(i, n));
  }
  return out;
}

FockOperator parity_operator(int n) {
  return (identity_operator(n) + parity_sign_operator(n)) * Complex{0.5, 0.0};
}

int parity_of(const Occupation& s) {
  int sum = 0;
  for (std::uint8_t bit : s) sum += bit;
  return sum % 2;
}

int parity_of_index(std::size_t index) { return std::popcount(index) % 2; }

int FieldPolynomial::max_mode() const {
  int best = 0;
  for (const FieldTerm& term : terms)
    for (const FieldFactor& f : term.monomial) best = std::max(best, f.mode);
  return best;
}

FockOperator evaluate_polynomial(const FieldPolynomial& p, int n) {
  check_mode_count(n);
  std::vector<FockOperator> lower, upper;
  for (int i = 1; i <= n; ++i) {
    lower.push_back(annihilator(i, n));
    upper.push_back(lower.back().adjoint());
  }
  const std::size_t dim = fock_dimension(n);
  SparseMatrix total(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const FieldTerm& term : p.terms) {
    FockOperator product = identity_operator(n);
    for (const FieldFactor& f : term.monomial) {
      check_mode(f.mode, n);
      product = product * (f.dagger ? upper[f.mode - 1] : lower[f.mode - 1]);
    }
    total += product.sparse() * term.coeff;
  }
  total.prune(Complex{0.0, 0.0});
  return FockOperator(n, std::move(total));
}

CarResiduals verify_car(int n) {
  check_mode_count(n);
  std::vector<SparseMatrix> a, ad;
  for (int i = 1; i <= n; ++i) {
    a.push_back(annihilator(i, n).sparse());
    ad.push_back(SparseMatrix(a.back().adjoint()));
  }
  const std::size_t dim = fock_dimension(n);
  SparseMatrix id(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  id.setIdentity();
  CarResiduals r;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j >= i) {
        SparseMatrix anti = a[i] * a[j] + a[j] * a[i];
        r.anticommutator = std::max(r.anticommutator, max_abs(anti));
      }
      SparseMatrix mixed = a[i] * ad[j] + ad[j] * a[i];
      if (i == j) mixed -= id;
      r.car = std::max(r.car, max_abs(mixed));
    }
  }
  return r;
}

int field_product_sign(std::size_t s, std::size_t t, int n) {
  // Each factor that changes mode i carries the Jordan-Wigner string of the
  // modes before i, read off the ket occupations t.
  int exponent = 0;
  for (int i = 1; i <= n; ++i) {
    const std::size_t bit = mode_bit(i, n);
    if ((s & bit) == (t & bit)) continue;
    const std::size_t before = ~(2 * bit - 1) & ((std::size_t{1} << n) - 1);
    exponent += std::popcount(t & before);
  }
  return exponent % 2 ? -1 : 1;
}

namespace {

// Factor phi^{dag s} phi phi^dag phi^{t} for one mode.
struct ModeFactors {
  SparseMatrix f[2][2];
};

std::vector<ModeFactors> mode_factors(std::span<const int> modes, int n) {
  std::vector<ModeFactors> out;
  for (int m : modes) {
    const SparseMatrix a = annihilator(m, n).sparse();
    const SparseMatrix ad = a.adjoint();
    ModeFactors mf;
    mf.f[0][0] = a * ad;
    mf.f[1][1] = ad * a;
    mf.f[1][0] = ad * mf.f[0][0];
    mf.f[0][1] = mf.f[0][0] * a;
    out.push_back(std::move(mf));
  }
  return out;
}

SparseMatrix ordered_product(const std::vector<ModeFactors>& factors,
                             std::size_t s, std::size_t t, int k) {
  SparseMatrix out = factors[0].f[(s >> (k - 1)) & 1u][(t >> (k - 1)) & 1u];
  for (int i = 1; i < k; ++i) {
    const int shift = k - 1 - i;
    out = out * factors[i].f[(s >> shift) & 1u][(t >> shift) & 1u];
  }
  return out;
}

}  // namespace

SparseMatrix embed_field_operator_sparse(const Matrix& local,
                                         std::span<const int> modes, int n) {
  check_mode_count(n);
  const int k = static_cast<int>(modes.size());
  if (k < 1 || k > n) throw std::invalid_argument("embedding needs 1..n modes");
  if (local.rows() != (Eigen::Index{1} << k) || local.cols() != local.rows()) {
    throw std::invalid_argument("local operator does not match mode list");
  }
  for (int a = 0; a < k; ++a) {
    check_mode(modes[a], n);
    for (int b = a + 1; b < k; ++b) {
      if (modes[a] == modes[b]) throw std::invalid_argument("repeated mode");
    }
  }
  std::vector<int> local_modes(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) local_modes[i] = i + 1;
  const auto local_factors = mode_factors(local_modes, k);
  const auto global_factors = mode_factors(modes, n);

  const std::size_t dim = fock_dimension(n);
  SparseMatrix total(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index s = 0; s < local.rows(); ++s) {
    for (Eigen::Index t = 0; t < local.cols(); ++t) {
      const Complex v = local(s, t);
      if (v == Complex{}) continue;
      const auto us = static_cast<std::size_t>(s);
      const auto ut = static_cast<std::size_t>(t);
      const Complex sign = ordered_product(local_factors, us, ut, k).coeff(s, t);
      total += ordered_product(global_factors, us, ut, k) * (v * sign);
    }
  }
  total.prune(Complex{0.0, 0.0});
  return total;
}

Matrix embed_field_operator(const Matrix& local, std::span<const int> modes,
                            int n) {
  if (n > kMaxDenseModes) {
    throw std::length_error("dense embedding limited to " +
                            std::to_string(kMaxDenseModes) + " modes");
  }
  return Matrix(embed_field_operator_sparse(local, modes, n));
}

}  // namespace fermsim
