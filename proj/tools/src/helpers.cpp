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

#include "helpers.hpp"

#include <cmath>
#include <sstream>

#include "fermsim/linalg.hpp"

namespace fermsim::verify {

Rng task_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::string str(const Count& c) { return c.str(); }

std::string label(const std::string& base, const std::vector<int>& values) {
  std::ostringstream os;
  os << base;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "[") << values[i];
  if (!values.empty()) os << "]";
  return os.str();
}

std::vector<std::vector<int>> nonempty_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i) {
      if (mask & (1 << (i - 1))) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

KrausMap random_fqt_channel(int n, int evens, int odds, Rng& rng) {
  std::vector<Matrix> ops;
  for (int i = 0; i < evens; ++i) ops.push_back(random_parity_operator(n, n, 0, rng));
  for (int i = 0; i < odds; ++i) ops.push_back(random_parity_operator(n, n, 1, rng));
  const Eigen::Index d = ops.front().cols();
  Matrix s = Matrix::Zero(d, d);
  for (const Matrix& k : ops) s += k.adjoint() * k;
  const Matrix inv_root = sqrt_psd(s).inverse();
  KrausMap map{n, n, {}};
  for (const Matrix& k : ops) map.kraus.push_back({1, k * inv_root});
  return map;
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

FieldPolynomial random_polynomial(int n, int terms, int max_len, Rng& rng) {
  std::uniform_int_distribution<int> mode(1, n), len(0, max_len), coin(0, 1);
  std::normal_distribution<double> g;
  FieldPolynomial p;
  for (int t = 0; t < terms; ++t) {
    FieldTerm term;
    term.coeff = Complex(g(rng), g(rng));
    const int l = len(rng);
    for (int f = 0; f < l; ++f) term.monomial.push_back({mode(rng), coin(rng) == 1});
    p.terms.push_back(term);
  }
  return p;
}

FieldPolynomial multiply(const FieldPolynomial& a, const FieldPolynomial& b) {
  FieldPolynomial out;
  for (const auto& x : a.terms) {
    for (const auto& y : b.terms) {
      FieldTerm t;
      t.coeff = x.coeff * y.coeff;
      t.monomial = x.monomial;
      t.monomial.insert(t.monomial.end(), y.monomial.begin(), y.monomial.end());
      out.terms.push_back(t);
    }
  }
  return out;
}

FieldPolynomial adjoint(const FieldPolynomial& a) {
  FieldPolynomial out;
  for (const auto& x : a.terms) {
    FieldTerm t;
    t.coeff = std::conj(x.coeff);
    for (auto it = x.monomial.rbegin(); it != x.monomial.rend(); ++it) {
      t.monomial.push_back({it->mode, !it->dagger});
    }
    out.terms.push_back(t);
  }
  return out;
}

Vector ket(const std::vector<std::pair<std::string, Complex>>& terms) {
  const int n = static_cast<int>(terms.front().first.size());
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  for (const auto& [s, c] : terms) {
    v(static_cast<Eigen::Index>(basis_index(parse_occupation(s)))) += c;
  }
  return v / v.norm();
}

Matrix projector(const Vector& v) { return v * v.adjoint(); }

Matrix phi_state() {
  return 0.5 * projector(ket({{"00", 1.0}, {"11", 1.0}})) +
         0.5 * projector(ket({{"01", 1.0}, {"10", 1.0}}));
}

Matrix phi_prime_state() {
  return projector(ket({{"000", 1.0}, {"110", 1.0}, {"011", 1.0}, {"101", 1.0}}));
}

}  // namespace fermsim::verify
