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
#include "fermsim/linalg.hpp"
#include "test_util.hpp"

namespace fermsim {
namespace {

using testing::kron_annihilator;

TEST(FockCore, CarHoldsUpToEightModes) {
  for (int n = 1; n <= 8; ++n) {
    const CarResiduals r = verify_car(n);
    EXPECT_LT(r.max(), 1e-12) << "n=" << n;
  }
}

TEST(FockCore, AnnihilatorMatchesTensorProduct) {
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(max_abs(annihilator(i, n).dense() - kron_annihilator(i, n)), 0.0);
    }
  }
}

TEST(FockCore, NumberOperatorIsProjector) {
  const int n = 4;
  for (int i = 1; i <= n; ++i) {
    const Matrix num = number_operator(i, n).dense();
    EXPECT_LT(max_abs(num * num - num), 1e-15);
    const auto ev = hermitian_eigenvalues(num);
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
      EXPECT_TRUE(std::abs(ev(k)) < 1e-12 || std::abs(ev(k) - 1.0) < 1e-12);
    }
  }
}

TEST(FockCore, FockVectorsAreOccupationEigenvectors) {
  const int n = 4;
  for (std::size_t x = 0; x < fock_dimension(n); ++x) {
    const Occupation s = occupation_of(x, n);
    const Vector v = fock_vector(s);
    EXPECT_EQ(basis_index(s), x);
    for (int i = 1; i <= n; ++i) {
      const Vector nv = number_operator(i, n).sparse() * v;
      EXPECT_LT((nv - static_cast<double>(s[i - 1]) * v).norm(), 1e-14);
      if (s[i - 1] == 0) {
        const Vector killed = annihilator(i, n).sparse() * v;
        EXPECT_LT(killed.norm(), 1e-14);
      }
    }
  }
}

TEST(FockCore, PermutedCreatorsPickUpPermutationSign) {
  const int n = 4;
  std::vector<int> order = {1, 2, 3, 4};
  const Vector target = fock_vector(Occupation{1, 1, 1, 1});
  do {
    Vector v = fock_vector(Occupation(n, 0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      v = creator(*it, n).sparse() * v;
    }
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += order[a] > order[b];
    }
    const double sign = inversions % 2 ? -1.0 : 1.0;
    EXPECT_LT((v - sign * target).norm(), 1e-14);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(FockCore, ParityCommutesWithEvenPolynomials) {
  Rng rng(testing::kSeed);
  std::uniform_int_distribution<int> mode(1, 4);
  std::normal_distribution<double> g;
  const int n = 4;
  const Matrix p = parity_operator(n).dense();
  for (int trial = 0; trial < 20; ++trial) {
    FieldPolynomial poly;
    for (int t = 0; t < 3; ++t) {
      FieldTerm term;
      term.coeff = Complex(g(rng), g(rng));
      const int len = 2 * (1 + trial % 2);
      for (int f = 0; f < len; ++f) term.monomial.push_back({mode(rng), (f + trial) % 3 == 0});
      poly.terms.push_back(term);
    }
    EXPECT_LT(commutator_residual(p, evaluate_polynomial(poly, n).dense()), 1e-12);
  }
}

TEST(FockCore, ParitySignConventions) {
  const int n = 3;
  const Matrix sign = parity_sign_operator(n).dense();
  const Matrix proj = parity_operator(n).dense();
  for (std::size_t x = 0; x < fock_dimension(n); ++x) {
    const double expected = parity_of_index(x) == 0 ? 1.0 : -1.0;
    EXPECT_EQ(sign(x, x).real(), expected);
    EXPECT_EQ(proj(x, x).real(), parity_of_index(x) == 0 ? 1.0 : 0.0);
    EXPECT_EQ(parity_of(occupation_of(x, n)), parity_of_index(x));
  }
}

TEST(FockCore, OccupationStringsRoundTrip) {
  EXPECT_EQ(to_string(parse_occupation("0110")), "0110");
  EXPECT_EQ(basis_index(parse_occupation("100")), 4u);
  EXPECT_THROW(parse_occupation("012"), std::invalid_argument);
  EXPECT_THROW(parse_occupation(""), std::invalid_argument);
}

TEST(FockCore, ModeCountLimits) {
  EXPECT_THROW(check_mode_count(0), std::invalid_argument);
  EXPECT_THROW(check_mode_count(13), std::invalid_argument);
  EXPECT_THROW(annihilator(0, 3), std::invalid_argument);
  EXPECT_THROW(annihilator(4, 3), std::invalid_argument);
  const FockOperator big = annihilator(12, 12);
  EXPECT_EQ(big.sparse().rows(), 4096);
  EXPECT_THROW((void)big.dense(), std::length_error);
  EXPECT_LT(verify_car(12).max(), 1e-12);
}

TEST(FockCore, FieldProductSignMatchesMatrixProduct) {
  const int n = 3;
  std::vector<Matrix> phi;
  for (int i = 1; i <= n; ++i) phi.push_back(annihilator(i, n).dense());
  const Eigen::Index dim = 8;
  for (std::size_t s = 0; s < 8; ++s) {
    for (std::size_t t = 0; t < 8; ++t) {
      Matrix prod = Matrix::Identity(dim, dim);
      for (int i = 1; i <= n; ++i) {
        const Matrix& a = phi[i - 1];
        Matrix factor = a * a.adjoint();
        if ((s >> (n - i)) & 1u) factor = a.adjoint() * factor;
        if ((t >> (n - i)) & 1u) factor = factor * a;
        prod = prod * factor;
      }
      const double sign = field_product_sign(s, t, n);
      EXPECT_EQ(prod(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)).real(), sign);
      EXPECT_LT(max_abs(prod) - 1.0, 1e-15);
    }
  }
}

TEST(FockCore, EmbeddingSendsLocalFieldsToGlobalFields) {
  const int n = 4;
  const Matrix a0 = kron_annihilator(1, 2);
  const Matrix a1 = kron_annihilator(2, 2);
  const std::vector<std::vector<int>> placements = {{1, 2}, {2, 4}, {4, 1}, {3, 2}};
  for (const auto& modes : placements) {
    EXPECT_LT(max_abs(embed_field_operator(a0, modes, n) - annihilator(modes[0], n).dense()), 1e-14);
    EXPECT_LT(max_abs(embed_field_operator(a1, modes, n) - annihilator(modes[1], n).dense()), 1e-14);
  }
}

TEST(FockCore, EmbeddingIsMultiplicative) {
  Rng rng(testing::kSeed + 1);
  const int n = 4;
  const std::vector<int> modes = {3, 1};
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = random_ginibre(4, 4, rng);
    const Matrix b = random_ginibre(4, 4, rng);
    const Matrix lhs = embed_field_operator(a * b, modes, n);
    const Matrix rhs = embed_field_operator(a, modes, n) * embed_field_operator(b, modes, n);
    EXPECT_LT(max_abs(lhs - rhs), 1e-12);
    EXPECT_LT(max_abs(embed_field_operator(a.adjoint(), modes, n) -
                      embed_field_operator(a, modes, n).adjoint()), 1e-12);
  }
}

}  // namespace
}  // namespace fermsim
