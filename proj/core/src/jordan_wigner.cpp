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

#include "fermsim/jordan_wigner.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "fermsim/linalg.hpp"

namespace fermsim {

namespace {

constexpr std::string_view kLetters = "IXYZ+-";

int letter_digit(char c) {
  const auto pos = kLetters.find(c);
  if (pos == std::string_view::npos) {
    throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
  }
  return static_cast<int>(pos);
}

// Product of two letters expanded on the basis {I, Z, +, -}.
struct LetterExpansion {
  std::array<std::pair<char, Complex>, 4> terms;
  int count = 0;
};

LetterExpansion expand(const Matrix& m) {
  LetterExpansion out;
  const Complex a = 0.5 * (m(0, 0) + m(1, 1));
  const Complex b = 0.5 * (m(0, 0) - m(1, 1));
  const std::array<std::pair<char, Complex>, 4> all = {
      std::pair<char, Complex>{'I', a},
      {'Z', b},
      {'+', m(1, 0)},
      {'-', m(0, 1)}};
  for (const auto& t : all) {
    if (std::abs(t.second) > 0.0) out.terms[out.count++] = t;
  }
  return out;
}

const LetterExpansion& product_table(char a, char b) {
  static const auto table = [] {
    std::array<std::array<LetterExpansion, 6>, 6> t{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        t[i][j] = expand(letter_matrix(kLetters[i]) * letter_matrix(kLetters[j]));
    return t;
  }();
  return table[letter_digit(a)][letter_digit(b)];
}

void check_ordering(std::span<const int> ordering, int n) {
  if (ordering.empty()) return;
  if (static_cast<int>(ordering.size()) != n) {
    throw std::invalid_argument("ordering must list every mode once");
  }
  std::vector<int> seen(ordering.begin(), ordering.end());
  std::sort(seen.begin(), seen.end());
  for (int k = 0; k < n; ++k) {
    if (seen[k] != k + 1) {
      throw std::invalid_argument("ordering is not a permutation of 1..n");
    }
  }
}

}  // namespace

bool LetterOrder::operator()(const std::string& a, const std::string& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int da = letter_digit(a[k]);
    const int db = letter_digit(b[k]);
    if (da != db) return da < db;
  }
  return false;
}

std::uint64_t letter_key(const std::string& letters) {
  if (letters.size() > 24) throw std::length_error("letter key supports 24 qubits");
  std::uint64_t key = 0;
  for (char c : letters) key = key * 6 + static_cast<std::uint64_t>(letter_digit(c));
  return key;
}

Matrix letter_matrix(char letter) {
  Matrix m = Matrix::Zero(2, 2);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    case '+': m << 0, 0, 1, 0; break;
    case '-': m << 0, 1, 0, 0; break;
    default: letter_digit(letter);
  }
  return m;
}

PauliPolynomial::PauliPolynomial(int n) : n_(n) {
  if (n < 1 || n > 24) throw std::invalid_argument("qubit count outside 1..24");
}

PauliPolynomial PauliPolynomial::identity(int n) {
  return single(n, std::string(static_cast<std::size_t>(n), 'I'));
}

PauliPolynomial PauliPolynomial::single(int n, const std::string& letters,
                                        Complex coeff) {
  PauliPolynomial p(n);
  p.add_term(letters, coeff);
  return p;
}

void PauliPolynomial::add_term(const std::string& letters, Complex coeff) {
  if (static_cast<int>(letters.size()) != n_) {
    throw std::invalid_argument("letter string length does not match qubits");
  }
  for (char c : letters) letter_digit(c);
  terms_[letters] += coeff;
  if (std::abs(terms_[letters]) < kDropTol) terms_.erase(letters);
}

void PauliPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = std::abs(it->second) < kDropTol ? terms_.erase(it) : std::next(it);
  }
}

PauliPolynomial PauliPolynomial::operator+(const PauliPolynomial& other) const {
  if (other.n_ != n_) throw std::invalid_argument("qubit count mismatch");
  PauliPolynomial out = *this;
  for (const auto& [letters, c] : other.terms_) out.terms_[letters] += c;
  out.prune();
  return out;
}

PauliPolynomial PauliPolynomial::operator-(const PauliPolynomial& other) const {
  return *this + other * Complex(-1.0, 0.0);
}

PauliPolynomial PauliPolynomial::operator*(Complex scalar) const {
  PauliPolynomial out = *this;
  for (auto& [letters, c] : out.terms_) c *= scalar;
  out.prune();
  return out;
}

PauliPolynomial PauliPolynomial::operator*(const PauliPolynomial& other) const {
  if (other.n_ != n_) throw std::invalid_argument("qubit count mismatch");
  PauliPolynomial out(n_);
  std::vector<std::pair<std::string, Complex>> partial;
  for (const auto& [la, ca] : terms_) {
    for (const auto& [lb, cb] : other.terms_) {
      partial.assign(1, {std::string(), ca * cb});
      for (int q = 0; q < n_ && !partial.empty(); ++q) {
        const LetterExpansion& e = product_table(la[q], lb[q]);
        std::vector<std::pair<std::string, Complex>> next;
        next.reserve(partial.size() * static_cast<std::size_t>(e.count));
        for (const auto& [prefix, c] : partial) {
          for (int k = 0; k < e.count; ++k) {
            next.emplace_back(prefix + e.terms[k].first, c * e.terms[k].second);
          }
        }
        partial = std::move(next);
      }
      for (const auto& [letters, c] : partial) out.terms_[letters] += c;
    }
  }
  out.prune();
  return out;
}

PauliPolynomial PauliPolynomial::adjoint() const {
  PauliPolynomial out(n_);
  for (const auto& [letters, c] : terms_) {
    std::string swapped = letters;
    for (char& ch : swapped) {
      if (ch == '+') {
        ch = '-';
      } else if (ch == '-') {
        ch = '+';
      }
    }
    out.terms_[swapped] += std::conj(c);
  }
  out.prune();
  return out;
}

SparseMatrix PauliPolynomial::to_sparse() const {
  if (n_ > kMaxModes) throw std::length_error("matrix form limited to 12 qubits");
  const std::size_t dim = std::size_t{1} << n_;
  std::vector<Eigen::Triplet<Complex>> trip;
  for (const auto& [letters, c] : terms_) {
    // Each letter matrix has at most one nonzero per column for I, X, Y, Z,
    // + and -, so the Kronecker product is a signed, scaled partial permutation.
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t row = 0;
      Complex v = c;
      for (int q = 0; q < n_ && v != Complex{}; ++q) {
        const int in = static_cast<int>((col >> (n_ - 1 - q)) & 1u);
        const Matrix m = letter_matrix(letters[q]);
        const int out_bit = std::abs(m(0, in)) > 0.0 ? 0 : 1;
        v *= m(out_bit, in);
        row = (row << 1) | static_cast<std::size_t>(out_bit);
      }
      if (v != Complex{}) {
        trip.emplace_back(static_cast<Eigen::Index>(row),
                          static_cast<Eigen::Index>(col), v);
      }
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(trip.begin(), trip.end());
  m.prune(Complex{0.0, 0.0});
  return m;
}

Matrix PauliPolynomial::to_dense() const {
  if (n_ > kMaxDenseModes) throw std::length_error("dense form limited to 10 qubits");
  return Matrix(to_sparse());
}

PauliPolynomial jwt_annihilator(int i, std::span<const int> ordering, int n) {
  check_mode_count(n);
  check_ordering(ordering, n);
  if (i < 1 || i > n) throw std::invalid_argument("mode index outside 1..n");
  const auto pi = [&](int k) { return ordering.empty() ? k : ordering[k - 1]; };
  std::string letters(static_cast<std::size_t>(n), 'I');
  for (int k = 1; k < i; ++k) letters[pi(k) - 1] = 'Z';
  letters[pi(i) - 1] = '-';
  return PauliPolynomial::single(n, letters);
}

PauliPolynomial jwt_polynomial(const FieldPolynomial& p, int n,
                               std::span<const int> ordering) {
  check_mode_count(n);
  check_ordering(ordering, n);
  std::vector<PauliPolynomial> lower, upper;
  for (int i = 1; i <= n; ++i) {
    lower.push_back(jwt_annihilator(i, ordering, n));
    upper.push_back(lower.back().adjoint());
  }
  PauliPolynomial total(n);
  for (const FieldTerm& term : p.terms) {
    PauliPolynomial product = PauliPolynomial::identity(n);
    for (const FieldFactor& f : term.monomial) {
      if (f.mode < 1 || f.mode > n) throw std::invalid_argument("mode outside 1..n");
      product = product * (f.dagger ? upper[f.mode - 1] : lower[f.mode - 1]);
    }
    total = total + product * term.coeff;
  }
  return total;
}

Matrix ordering_permutation(std::span<const int> ordering, int n) {
  check_ordering(ordering, n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::size_t> image(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (int k = 1; k <= n; ++k) {
      if ((x >> (n - k)) & 1u) {
        const int target = ordering.empty() ? k : ordering[k - 1];
        y |= std::size_t{1} << (n - target);
      }
    }
    image[x] = y;
  }
  return permutation_matrix(image);
}

SigmaIdentityResiduals pauli_from_fields_identities(int n) {
  check_mode_count(n);
  SigmaIdentityResiduals r;
  for (int i = 1; i <= n; ++i) {
    const PauliPolynomial a = jwt_annihilator(i, {}, n);
    const PauliPolynomial ad = a.adjoint();
    std::string zs(static_cast<std::size_t>(n), 'I');
    for (int k = 1; k < i; ++k) zs[k - 1] = 'Z';
    const PauliPolynomial z_string = PauliPolynomial::single(n, zs);
    const auto at = [&](char letter) {
      std::string s(static_cast<std::size_t>(n), 'I');
      s[i - 1] = letter;
      return PauliPolynomial::single(n, s).to_sparse();
    };
    const SparseMatrix sx = (z_string * (a + ad)).to_sparse();
    const SparseMatrix sy = (z_string * (a - ad) * Complex(0.0, -1.0)).to_sparse();
    const SparseMatrix sz_lit = (ad * a - a * ad).to_sparse();
    const SparseMatrix sz_par = (a * ad - ad * a).to_sparse();
    r.x = std::max(r.x, max_abs(SparseMatrix(at('X') - sx)));
    r.y = std::max(r.y, max_abs(SparseMatrix(at('Y') - sy)));
    r.z_literal = std::max(r.z_literal, max_abs(SparseMatrix(at('Z') - sz_lit)));
    r.z_parity = std::max(r.z_parity, max_abs(SparseMatrix(at('Z') - sz_par)));
  }
  return r;
}

}  // namespace fermsim
