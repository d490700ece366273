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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fermsim/fock_core.hpp"
#include "fermsim/jordan_wigner.hpp"
#include "fermsim/linalg.hpp"
#include "test_util.hpp"

namespace fermsim {
namespace {

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

TEST(JordanWigner, TrivialOrderingMatchesFockOperators) {
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      const Matrix image = jwt_annihilator(i, {}, n).to_dense();
      EXPECT_EQ(max_abs(image - annihilator(i, n).dense()), 0.0);
      EXPECT_EQ(max_abs(image - testing::kron_annihilator(i, n)), 0.0);
    }
  }
}

TEST(JordanWigner, StarHomomorphism) {
  Rng rng(testing::kSeed);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const FieldPolynomial p = random_polynomial(n, 3, 3, rng);
      const FieldPolynomial q = random_polynomial(n, 3, 3, rng);
      const Matrix jp = jwt_polynomial(p, n).to_dense();
      const Matrix jq = jwt_polynomial(q, n).to_dense();
      EXPECT_LT(max_abs(jwt_polynomial(multiply(p, q), n).to_dense() - jp * jq), 1e-12);
      EXPECT_LT(max_abs(jwt_polynomial(adjoint(p), n).to_dense() - jp.adjoint()), 1e-12);
      EXPECT_LT(max_abs(jp - evaluate_polynomial(p, n).dense()), 1e-12);
    }
  }
}

TEST(JordanWigner, EveryOrderingSatisfiesCar) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    do {
      std::vector<Matrix> a;
      for (int i = 1; i <= n; ++i) a.push_back(jwt_annihilator(i, pi, n).to_dense());
      const Eigen::Index d = a[0].rows();
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const Matrix delta = (i == j ? 1.0 : 0.0) * Matrix::Identity(d, d);
          worst = std::max(worst, max_abs(a[i] * a[j].adjoint() + a[j].adjoint() * a[i] - delta));
          worst = std::max(worst, max_abs(a[i] * a[j] + a[j] * a[i]));
        }
      }
      EXPECT_LT(worst, 1e-12);
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
}

TEST(JordanWigner, OrderingCovariance) {
  const int n = 4;
  std::vector<int> pi = {1, 2, 3, 4};
  do {
    const Matrix q = ordering_permutation(pi, n);
    for (int i = 1; i <= n; ++i) {
      const Matrix lhs = jwt_annihilator(i, pi, n).to_dense();
      const Matrix rhs = q * annihilator(i, n).dense() * q.adjoint();
      EXPECT_LT(max_abs(lhs - rhs), 1e-14);
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
}

TEST(JordanWigner, ReversalOrderingPlacesStringsOnLaterQubits) {
  const std::vector<int> reversal = {3, 2, 1};
  EXPECT_EQ(jwt_annihilator(1, reversal, 3).terms().begin()->first, "II-");
  EXPECT_EQ(jwt_annihilator(2, reversal, 3).terms().begin()->first, "I-Z");
  EXPECT_EQ(jwt_annihilator(3, reversal, 3).terms().begin()->first, "-ZZ");
}

TEST(JordanWigner, ParityMapsToZString) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Matrix> zs(static_cast<std::size_t>(n), testing::sigma_z());
    EXPECT_LT(max_abs(parity_sign_operator(n).dense() - kron_all(zs)), 1e-15);
  }
}

TEST(JordanWigner, SigmaIdentities) {
  for (int n = 1; n <= 6; ++n) {
    const SigmaIdentityResiduals r = pauli_from_fields_identities(n);
    EXPECT_LT(r.x, 1e-12);
    EXPECT_LT(r.y, 1e-12);
    EXPECT_LT(r.z_parity, 1e-12);
    // phi^dag phi - phi phi^dag is -sigma^z with the lowering-matrix annihilator.
    EXPECT_NEAR(r.z_literal, 2.0, 1e-12);
  }
}

TEST(JordanWigner, LetterAlgebra) {
  const std::string letters = "IXYZ+-";
  for (char a : letters) {
    for (char b : letters) {
      PauliPolynomial pa = PauliPolynomial::single(1, std::string(1, a));
      PauliPolynomial pb = PauliPolynomial::single(1, std::string(1, b));
      EXPECT_LT(max_abs((pa * pb).to_dense() - letter_matrix(a) * letter_matrix(b)), 1e-15)
          << a << b;
    }
    EXPECT_LT(max_abs(PauliPolynomial::single(1, std::string(1, a)).adjoint().to_dense() -
                      letter_matrix(a).adjoint()), 1e-15);
  }
  EXPECT_EQ(letter_key("I"), 0u);
  EXPECT_EQ(letter_key("-"), 5u);
  EXPECT_EQ(letter_key("XI"), 6u);
  EXPECT_TRUE(LetterOrder{}("ZZ", "+I"));
}

TEST(JordanWigner, PolynomialsMergeAndPrune) {
  PauliPolynomial p(2);
  p.add_term("XZ", 1.0);
  p.add_term("XZ", -1.0);
  EXPECT_TRUE(p.terms().empty());
  p.add_term("XY", Complex(0, 1));
  const PauliPolynomial sq = p * p;
  ASSERT_EQ(sq.terms().size(), 1u);
  EXPECT_EQ(sq.terms().begin()->first, "II");
  EXPECT_NEAR(std::abs(sq.terms().begin()->second + 1.0), 0.0, 1e-15);
  EXPECT_THROW(p.add_term("XQ", 1.0), std::invalid_argument);
  EXPECT_THROW(p.add_term("X", 1.0), std::invalid_argument);
}

TEST(JordanWigner, RejectsBadOrderings) {
  const std::vector<int> dup = {1, 1, 2};
  const std::vector<int> short_pi = {1, 2};
  EXPECT_THROW(jwt_annihilator(1, dup, 3), std::invalid_argument);
  EXPECT_THROW(jwt_annihilator(1, short_pi, 3), std::invalid_argument);
}

}  // namespace
}  // namespace fermsim
