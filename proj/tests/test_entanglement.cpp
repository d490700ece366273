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

#include <cmath>

#include "fermsim/channels.hpp"
#include "fermsim/entanglement.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/jordan_wigner.hpp"
#include "fermsim/linalg.hpp"
#include "fermsim/superselection.hpp"
#include "test_util.hpp"

namespace fermsim {
namespace {

Vector ket(std::initializer_list<std::pair<const char*, Complex>> terms) {
  const int n = static_cast<int>(std::string(terms.begin()->first).size());
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  for (const auto& [s, c] : terms) v(static_cast<Eigen::Index>(basis_index(parse_occupation(s)))) += c;
  return v / v.norm();
}

Matrix projector(const Vector& v) { return v * v.adjoint(); }

Matrix phi_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return 0.5 * projector(ket({{"00", r}, {"11", r}})) + 0.5 * projector(ket({{"01", r}, {"10", r}}));
}

double pure_concurrence(const Vector& v) {
  return 2.0 * std::abs(v(0) * v(3) - v(1) * v(2));
}

// Ordinary qubit partial trace keeping qubits a < b of three.
Matrix qubit_marginal(const Matrix& rho, int traced) {
  Matrix out = Matrix::Zero(4, 4);
  const auto compose = [traced](int kept, int t) {
    const int hi = (kept >> 1) & 1, lo = kept & 1;
    if (traced == 0) return (t << 2) | (hi << 1) | lo;
    if (traced == 1) return (hi << 2) | (t << 1) | lo;
    return (hi << 2) | (lo << 1) | t;
  };
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      for (int u = 0; u < 2; ++u) out(s, t) += rho(compose(s, u), compose(t, u));
    }
  }
  return out;
}

TEST(Entanglement, WoottersReferenceValues) {
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(wootters_concurrence(projector(ket({{"00", r}, {"11", r}}))), 1.0, 1e-12);
  EXPECT_NEAR(wootters_concurrence(projector(ket({{"00", 1.0}}))), 0.0, 1e-12);
  EXPECT_NEAR(eof_from_concurrence(1.0), 1.0, 1e-12);
  EXPECT_NEAR(eof_from_concurrence(0.0), 0.0, 1e-12);
  const double c = 0.5;
  EXPECT_NEAR(eof_from_concurrence(c), binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0), 1e-15);
}

TEST(Entanglement, WoottersIsBelowEveryDecompositionAverage) {
  Rng rng(testing::kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const Vector a = random_unit_vector(4, rng);
    const Vector b = random_unit_vector(4, rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Matrix rho = p * projector(a) + (1 - p) * projector(b);
    EXPECT_NEAR(wootters_concurrence(projector(a)), pure_concurrence(a), 1e-10);
    EXPECT_LE(wootters_concurrence(rho), p * pure_concurrence(a) + (1 - p) * pure_concurrence(b) + 1e-10);
  }
}

TEST(Entanglement, PhiReferenceValues) {
  const Matrix phi = phi_state();
  ASSERT_TRUE(is_valid_fqt_state(phi, 2).valid);
  const SectorMeasure cf = fermionic_concurrence(phi);
  EXPECT_NEAR(cf.value, 1.0, 1e-10);
  EXPECT_NEAR(cf.p0, 0.5, 1e-12);
  EXPECT_NEAR(cf.c1, 1.0, 1e-10);
  EXPECT_NEAR(fermionic_eof_lower(phi).value, 1.0, 1e-10);

  const SeparabilityResult full = full_separability_test(phi, 2);
  EXPECT_FALSE(full.separable);
  EXPECT_NEAR(full.witness, 0.25, 1e-12);
  EXPECT_FALSE(bipartite_sector_separability(phi).separable);
  const Matrix xx = kron(letter_matrix('X'), letter_matrix('X'));
  EXPECT_NEAR((phi * xx).trace().real(), 1.0, 1e-12);
}

TEST(Entanglement, PureSectorStatesFollowSchmidtFormula) {
  for (double theta : {0.0, 0.2, 0.7, 1.1, M_PI / 4}) {
    const Vector v = ket({{"00", std::cos(theta)}, {"11", std::sin(theta)}});
    const Matrix rho = projector(v);
    EXPECT_NEAR(fermionic_concurrence(rho).value, std::abs(std::sin(2 * theta)), 1e-10);
    const double c2 = std::cos(theta) * std::cos(theta);
    EXPECT_NEAR(fermionic_eof_lower(rho).value, binary_entropy(c2), 1e-9);
  }
  EXPECT_NEAR(fermionic_concurrence(projector(ket({{"01", 1.0}}))).value, 0.0, 1e-12);
}

TEST(Entanglement, RandomStatesRespectBounds) {
  Rng rng(testing::kSeed + 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix rho = random_fqt_state(2, rng);
    const SectorMeasure cf = fermionic_concurrence(rho);
    const SectorMeasure ef = fermionic_eof_lower(rho);
    EXPECT_GE(cf.value, -1e-12);
    EXPECT_LE(cf.value, 1.0 + 1e-12);
    EXPECT_NEAR(cf.value, cf.p0 * cf.c0 + cf.p1 * cf.c1, 1e-12);
    EXPECT_GE(ef.value, eof_from_concurrence(cf.value) - 1e-10);
    const bool separable = bipartite_sector_separability(rho).separable;
    if (cf.value > 1e-6) EXPECT_FALSE(separable);
    if (cf.value < 1e-12) EXPECT_TRUE(separable);
  }
}

TEST(Entanglement, PureStatesHaveEqualBoundAndFormation) {
  Rng rng(testing::kSeed + 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix rho = projector(random_fqt_pure_state(2, rng, trial % 2));
    EXPECT_NEAR(fermionic_eof_lower(rho).value, eof_from_concurrence(fermionic_concurrence(rho).value),
                1e-9);
  }
}

TEST(Entanglement, ConcurrenceIsInvariantUnderLocalUnitaries) {
  Rng rng(testing::kSeed + 3);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  const Matrix flip_a = (annihilator(1, 2) + creator(1, 2)).dense();
  const Matrix flip_b = (annihilator(2, 2) + creator(2, 2)).dense();
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix rho = random_fqt_state(2, rng);
    const Matrix phases = kron(Eigen::Vector2cd(1.0, std::polar(1.0, angle(rng))).asDiagonal().toDenseMatrix(),
                               Eigen::Vector2cd(1.0, std::polar(1.0, angle(rng))).asDiagonal().toDenseMatrix());
    const double base = fermionic_concurrence(rho).value;
    for (const Matrix& u : {phases, flip_a, flip_b, Matrix(flip_a * flip_b * phases)}) {
      EXPECT_NEAR(fermionic_concurrence(u * rho * u.adjoint()).value, base, 1e-9);
    }
  }
}

TEST(Entanglement, SeparabilityExamples) {
  Matrix diag = Matrix::Zero(4, 4);
  diag.diagonal() << 0.1, 0.2, 0.3, 0.4;
  EXPECT_TRUE(full_separability_test(diag, 2).separable);
  EXPECT_TRUE(bipartite_sector_separability(diag).separable);
  const Matrix classical = 0.5 * projector(ket({{"00", 1.0}})) + 0.5 * projector(ket({{"11", 1.0}}));
  EXPECT_TRUE(bipartite_sector_separability(classical).separable);
  const Matrix mes = projector(ket({{"00", 0.6}, {"11", 0.8}}));
  EXPECT_FALSE(full_separability_test(mes, 2).separable);
}

TEST(Entanglement, MesMembership) {
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(mes_membership(ket({{"00", r}, {"11", r}})), MesClass::kEven);
  EXPECT_EQ(mes_membership(ket({{"01", 0.6}, {"10", 0.8}})), MesClass::kOdd);
  EXPECT_EQ(mes_membership(ket({{"01", 1.0}})), MesClass::kNone);
  EXPECT_EQ(mes_membership(ket({{"00", 1.0}, {"11", 1e-12}})), MesClass::kNone);
  EXPECT_EQ(mes_membership(projector(ket({{"00", r}, {"11", Complex(0, r)}}))), MesClass::kEven);
  EXPECT_EQ(to_string(MesClass::kOdd), "MES_1");
}

TEST(Entanglement, MonogamyWitness) {
  const Vector phi_prime = ket({{"000", 0.5}, {"110", 0.5}, {"011", 0.5}, {"101", 0.5}});
  const MonogamyResult m = monogamy_witness(projector(phi_prime));
  EXPECT_NEAR(m.c_ab, 1.0, 1e-10);
  EXPECT_NEAR(m.c_ac, 1.0, 1e-10);
  EXPECT_NEAR(m.sum_of_squares, 2.0, 1e-10);
  EXPECT_TRUE(m.exceeds_ckw);

  const MonogamyResult vac = monogamy_witness(projector(ket({{"000", 1.0}})));
  EXPECT_NEAR(vac.sum_of_squares, 0.0, 1e-12);
  const double r = 1.0 / std::sqrt(2.0);
  const MonogamyResult edge = monogamy_witness(projector(ket({{"000", r}, {"110", r}})));
  EXPECT_NEAR(edge.c_ab, 1.0, 1e-10);
  EXPECT_NEAR(edge.c_ac, 0.0, 1e-10);
  EXPECT_FALSE(edge.exceeds_ckw);
}

TEST(Entanglement, QubitStatesObeyCkw) {
  Rng rng(testing::kSeed + 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix rho = projector(random_unit_vector(8, rng));
    const double cab = wootters_concurrence(qubit_marginal(rho, 2));
    const double cac = wootters_concurrence(qubit_marginal(rho, 1));
    EXPECT_LE(cab * cab + cac * cac, 1.0 + 1e-10);
  }
}

// Random instrument of definite-parity Kraus operators on k modes.
std::vector<KrausMap> random_instrument(int k, int outcomes, Rng& rng) {
  const KrausMap all = testing::random_fqt_channel(k, outcomes, outcomes, rng);
  std::vector<KrausMap> out;
  for (int o = 0; o < outcomes; ++o) {
    out.push_back({k, k, {all.kraus[o], all.kraus[outcomes + o]}});
  }
  return out;
}

Matrix reference_protocol(const LoccProtocol& p, const Matrix& rho) {
  const int n = p.total_modes();
  std::vector<Matrix> branch = {rho};
  for (const LoccRound& round : p.rounds) {
    std::vector<int> modes;
    for (int m = 0; m < p.party_modes[round.party]; ++m) modes.push_back(p.first_mode(round.party) + m);
    std::vector<Matrix> next(round.branches.front().size(), Matrix::Zero(rho.rows(), rho.cols()));
    for (std::size_t prev = 0; prev < branch.size(); ++prev) {
      const auto& instrument = round.branches.size() == 1 ? round.branches[0] : round.branches[prev];
      for (std::size_t o = 0; o < instrument.size(); ++o) {
        for (const KrausTerm& t : instrument[o].kraus) {
          const Matrix k = embed_field_operator(t.op, modes, n);
          next[o] += k * branch[prev] * k.adjoint();
        }
      }
    }
    branch = next;
  }
  Matrix total = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& b : branch) total += b;
  return total;
}

TEST(Locc, TranslationPreservesChannel) {
  Rng rng(testing::kSeed + 5);
  const std::vector<std::vector<int>> partitions = {{1, 1}, {1, 2}, {2, 1}, {1, 1, 1}, {2, 2}, {1, 2, 1}};
  for (const auto& parts : partitions) {
    LoccProtocol p;
    p.party_modes = parts;
    const int rounds = 3;
    std::size_t outcomes = 1;
    for (int r = 0; r < rounds; ++r) {
      LoccRound round;
      round.party = (r * 2 + 1) % static_cast<int>(parts.size());
      const int k = parts[round.party];
      const int next_outcomes = 2;
      for (std::size_t b = 0; b < outcomes; ++b) round.branches.push_back(random_instrument(k, next_outcomes, rng));
      outcomes = next_outcomes;
      p.rounds.push_back(round);
    }
    const QubitProtocol q = locc_translate(p);
    EXPECT_EQ(q.classical_bits(), rounds);
    for (const QubitRound& r : q.rounds) EXPECT_EQ(r.parity_bits, 1);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix rho = random_fqt_state(p.total_modes(), rng);
      const Matrix fermionic = apply_fermionic_protocol(p, rho);
      EXPECT_LT(max_abs(fermionic - reference_protocol(p, rho)), 1e-12);
      EXPECT_LT(max_abs(apply_qubit_protocol(q, rho) - fermionic), 1e-10);
    }
  }
}

TEST(Locc, EvenRoundNeedsNoCorrection) {
  LoccProtocol p;
  p.party_modes = {1, 1};
  const Matrix phase = Eigen::Vector2cd(1.0, Complex(0, 1)).asDiagonal();
  p.rounds.push_back({1, {{KrausMap{1, 1, {KrausTerm{1, phase}}}}}});
  const QubitProtocol q = locc_translate(p);
  ASSERT_EQ(q.rounds.size(), 1u);
  EXPECT_EQ(q.classical_bits(), 1);
  EXPECT_EQ(q.rounds[0].branches[0][0][0].parity_bit, 0);
}

TEST(Locc, OddRoundOnLastModeCorrectsEarlierWires) {
  LoccProtocol p;
  p.party_modes = {2, 1};
  const Matrix x = (annihilator(1, 1) + creator(1, 1)).dense();
  p.rounds.push_back({1, {{KrausMap{1, 1, {KrausTerm{1, x}}}}}});
  const QubitProtocol q = locc_translate(p);
  EXPECT_EQ(q.rounds[0].correction_wires, (std::vector<int>{0, 1}));
  EXPECT_EQ(q.rounds[0].branches[0][0][0].parity_bit, 1);
  Rng rng(testing::kSeed + 6);
  const Matrix rho = random_fqt_state(3, rng);
  const Matrix expected = (annihilator(3, 3) + creator(3, 3)).dense();
  EXPECT_LT(max_abs(apply_qubit_protocol(q, rho) - expected * rho * expected.adjoint()), 1e-12);
}

TEST(Locc, MeasureAndConditionalFlipOnMes) {
  // Alice measures her mode and Bob flips his mode when she saw 1.
  LoccProtocol p;
  p.party_modes = {1, 1};
  const Matrix p0 = Eigen::Vector2cd(1.0, 0.0).asDiagonal();
  const Matrix p1 = Eigen::Vector2cd(0.0, 1.0).asDiagonal();
  const Matrix x = (annihilator(1, 1) + creator(1, 1)).dense();
  const Matrix id = Matrix::Identity(2, 2);
  p.rounds.push_back({0, {{KrausMap{1, 1, {KrausTerm{1, p0}}}, KrausMap{1, 1, {KrausTerm{1, p1}}}}}});
  p.rounds.push_back({1, {{KrausMap{1, 1, {KrausTerm{1, id}}}}, {KrausMap{1, 1, {KrausTerm{1, x}}}}}});
  const double r = 1.0 / std::sqrt(2.0);
  const Matrix mes = projector(ket({{"00", r}, {"11", r}}));
  const Matrix expected = 0.5 * projector(ket({{"00", 1.0}})) + 0.5 * projector(ket({{"10", 1.0}}));
  EXPECT_LT(max_abs(apply_fermionic_protocol(p, mes) - expected), 1e-12);
  EXPECT_LT(max_abs(apply_qubit_protocol(locc_translate(p), mes) - expected), 1e-10);
}

TEST(Locc, RejectsMalformedProtocols) {
  LoccProtocol p;
  p.party_modes = {1};
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.party_modes = {1, 1};
  p.rounds.push_back({0, {{KrausMap{2, 2, {KrausTerm{1, Matrix::Identity(4, 4)}}}}}});
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.rounds[0] = {3, {{KrausMap{1, 1, {KrausTerm{1, Matrix::Identity(2, 2)}}}}}};
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace fermsim
