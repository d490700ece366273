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

#include <algorithm>
#include <cmath>

#include "fermsim/channels.hpp"
#include "fermsim/entanglement.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/jordan_wigner.hpp"
#include "fermsim/linalg.hpp"
#include "fermsim/superselection.hpp"
#include "fermsim_tools/verify.hpp"
#include "helpers.hpp"

namespace fermsim::verify {
namespace {

constexpr double kChannelTol = 1e-10;
constexpr double kCounterexampleGap = 0.1;
constexpr int kStatesPerKeepSet = 200;
constexpr int kRandomEntanglementStates = 500;

double pairing_gap(const Matrix& a, const Matrix& b, int n) {
  double gap = 0.0;
  for (const Matrix& e : sector_hermitian_basis(n)) {
    gap = std::max(gap, std::abs((e * (a - b)).trace()));
  }
  return gap;
}

std::vector<Check> partial_trace_checks(int n, std::vector<int> keep, Rng rng) {
  double worst = 0.0;
  int invalid = 0;
  for (int trial = 0; trial < kStatesPerKeepSet; ++trial) {
    const Matrix rho = random_fqt_state(n, rng);
    const Matrix fast = partial_trace(rho, keep, n);
    worst = std::max(worst, max_abs(fast - marginal_oracle(rho, keep, n)));
    if (!is_valid_fqt_state(fast, static_cast<int>(keep.size())).valid) ++invalid;
  }
  const std::string p = label("partial_trace/n=" + std::to_string(n) + "/keep", keep);
  return {below(p + "/oracle_deviation", worst, kChannelTol),
          matches(p + "/invalid_marginals", std::to_string(invalid), "0")};
}

std::vector<Check> canonicalization_checks(Rng rng) {
  std::vector<Check> out;
  for (int n = 1; n <= 2; ++n) {
    KrausMap mixed{n, n, {}};
    for (int i = 0; i < 3; ++i) mixed.kraus.push_back({1, random_ginibre(1 << n, 1 << n, rng)});
    mixed.kraus.push_back({-1, random_ginibre(1 << n, 1 << n, rng)});
    const KrausMap canon = canonicalize(mixed);
    int undefined = 0;
    for (const KrausTerm& t : canon.kraus) undefined += operator_parity(t.op, n, n) < 0;
    out.push_back(matches("canonicalize/n=" + std::to_string(n) + "/mixed_parity_terms",
                        std::to_string(undefined), "0"));
    for (int anc = 0; anc <= 2; ++anc) {
      for (bool first : {true, false}) {
        const KrausMap a = extend_with_ancilla(mixed, anc, first);
        const KrausMap b = extend_with_ancilla(canon, anc, first);
        double gap = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
          const Matrix rho = random_fqt_state(n + anc, rng);
          gap = std::max(gap, pairing_gap(apply_channel(a, rho), apply_channel(b, rho), n + anc));
        }
        out.push_back(below("canonicalize/n=" + std::to_string(n) + "/ancilla=" + std::to_string(anc) +
                                (first ? "/first" : "/last") + "/pairing_gap",
                            gap, kChannelTol));
      }
    }
  }
  return out;
}

std::vector<Check> counterexample_checks() {
  const Matrix x = (annihilator(1, 1) + creator(1, 1)).dense();
  const Matrix y = letter_matrix('Y');
  const Matrix u = (Matrix::Identity(2, 2) + Complex(0, 1) * x) / std::sqrt(2.0);
  const KrausMap map{1, 1, {KrausTerm{1, u}}};
  const KrausMap canon = canonicalize(map);
  const Matrix rho = (Matrix::Identity(2, 2) + y) / 2.0;
  const Matrix effect = vacuum_projector(1).dense();
  const double gap =
      std::abs((effect * (apply_channel(map, rho) - apply_channel(canon, rho))).trace());
  return {matches("canonicalize/counterexample/state_superselected",
                is_valid_fqt_state(rho, 1).valid ? "true" : "false", "false"),
          above("canonicalize/counterexample/disagreement", gap, kCounterexampleGap)};
}

int ceil_log2(int c) {
  int bits = 0;
  while ((1 << bits) < c) ++bits;
  return bits;
}

std::vector<Check> dilation_checks(Rng rng) {
  std::vector<Check> out;
  double isometry = 0.0, equality = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 2;
    const int evens = 1 + trial % 4;
    const int odds = trial % 3;
    const KrausMap map = random_fqt_channel(n, evens, odds, rng);
    const Dilation d = dilate(map);
    const int expected = std::max(ceil_log2(evens), ceil_log2(odds)) + 1;
    out.push_back(matches("dilation/trial=" + std::to_string(trial) + "/ancilla_modes",
                        std::to_string(d.ancilla_modes), std::to_string(expected)));
    const Eigen::Index sys = Eigen::Index{1} << n;
    const Matrix embed = kron(Matrix::Identity(sys, sys), d.ancilla_state);
    const Matrix restricted = d.single_kraus * embed;
    isometry = std::max(isometry, max_abs(restricted.adjoint() * restricted - embed));
    for (int s = 0; s < 5; ++s) {
      const Matrix rho = random_fqt_state(n, rng);
      equality = std::max(equality, max_abs(apply_dilation(d, rho) - apply_channel(map, rho)));
    }
  }
  out.push_back(below("dilation/isometry_on_vacuum", isometry, kChannelTol));
  out.push_back(below("dilation/channel_equality", equality, kChannelTol));
  return out;
}

std::vector<Check> determinism_checks(Rng rng) {
  std::vector<Check> out;
  for (int n = 1; n <= 3; ++n) {
    const KrausMap map = random_fqt_channel(n, 2, 1, rng);
    double trace_gap = 0.0;
    for (const Matrix& e : sector_hermitian_basis(n)) {
      trace_gap = std::max(trace_gap, std::abs(apply_channel(map, e).trace() - e.trace()));
    }
    const std::string p = "determinism/n=" + std::to_string(n);
    out.push_back(below(p + "/unit_effect", determinism_residual(map), kChannelTol));
    out.push_back(below(p + "/trace_preservation", trace_gap, kChannelTol));
  }
  return out;
}

std::vector<Check> reference_values() {
  const Matrix phi = phi_state();
  const SectorMeasure cf = fermionic_concurrence(phi);
  const SectorMeasure ef = fermionic_eof_lower(phi);
  const SeparabilityResult sep = full_separability_test(phi, 2);
  const Matrix xx = kron(letter_matrix('X'), letter_matrix('X'));
  const MonogamyResult mono = monogamy_witness(phi_prime_state());
  Matrix diag = Matrix::Zero(4, 4);
  diag.diagonal() << 0.1, 0.2, 0.3, 0.4;
  return {
      below("phi/concurrence_minus_one", std::abs(cf.value - 1.0), kChannelTol),
      below("phi/eof_minus_one", std::abs(ef.value - 1.0), kChannelTol),
      matches("phi/separable", sep.separable ? "true" : "false", "false"),
      below("phi/trace_xx_minus_one", std::abs((phi * xx).trace().real() - 1.0), kChannelTol),
      below("phi/witness_entry_minus_quarter", std::abs(sep.witness - 0.25), kChannelTol),
      below("phi_prime/c_ab_minus_one", std::abs(mono.c_ab - 1.0), kChannelTol),
      below("phi_prime/c_ac_minus_one", std::abs(mono.c_ac - 1.0), kChannelTol),
      below("phi_prime/sum_of_squares_minus_two", std::abs(mono.sum_of_squares - 2.0), kChannelTol),
      matches("diagonal/separable", full_separability_test(diag, 2).separable ? "true" : "false",
            "true"),
  };
}

std::vector<Check> random_state_checks(int count, Rng rng) {
  double eof_deficit = 0.0;
  int inconsistent = 0;
  for (int trial = 0; trial < count; ++trial) {
    const Matrix rho = random_fqt_state(2, rng);
    const SectorMeasure cf = fermionic_concurrence(rho);
    const SectorMeasure ef = fermionic_eof_lower(rho);
    eof_deficit = std::max(eof_deficit, eof_from_concurrence(cf.value) - ef.value);
    const bool separable = bipartite_sector_separability(rho).separable;
    if ((cf.value > 1e-6 && separable) || (cf.value < 1e-12 && !separable)) ++inconsistent;
  }
  const std::string p = "random_states/count=" + std::to_string(count);
  return {below(p + "/eof_below_concurrence_bound", eof_deficit, kChannelTol),
          matches(p + "/separability_disagrees_with_concurrence", std::to_string(inconsistent), "0")};
}

std::vector<KrausMap> random_instrument(int k, int outcomes, Rng& rng) {
  const KrausMap all = random_fqt_channel(k, outcomes, outcomes, rng);
  std::vector<KrausMap> out;
  for (int o = 0; o < outcomes; ++o) out.push_back({k, k, {all.kraus[o], all.kraus[outcomes + o]}});
  return out;
}

// Applies every round through the field embedding of the local Kraus
// operators, summing over outcome branches.
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

std::vector<Check> locc_checks(const std::vector<int>& parts, Rng rng) {
  constexpr int kRounds = 3;
  LoccProtocol p;
  p.party_modes = parts;
  std::size_t outcomes = 1;
  for (int r = 0; r < kRounds; ++r) {
    LoccRound round;
    round.party = (r * 2 + 1) % static_cast<int>(parts.size());
    for (std::size_t b = 0; b < outcomes; ++b) {
      round.branches.push_back(random_instrument(parts[round.party], 2, rng));
    }
    outcomes = 2;
    p.rounds.push_back(round);
  }
  const QubitProtocol q = locc_translate(p);
  int bad_rounds = 0;
  for (const QubitRound& r : q.rounds) bad_rounds += r.parity_bits != 1;
  double fermionic = 0.0, qubit = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix rho = random_fqt_state(p.total_modes(), rng);
    const Matrix f = apply_fermionic_protocol(p, rho);
    fermionic = std::max(fermionic, max_abs(f - reference_protocol(p, rho)));
    qubit = std::max(qubit, max_abs(apply_qubit_protocol(q, rho) - f));
  }
  const std::string pre = label("locc/parties", parts);
  return {matches(pre + "/classical_bits", std::to_string(q.classical_bits()), std::to_string(kRounds)),
          matches(pre + "/rounds_without_one_bit", std::to_string(bad_rounds), "0"),
          below(pre + "/fermionic_vs_embedded", fermionic, kChannelTol),
          below(pre + "/qubit_vs_fermionic", qubit, kChannelTol)};
}

void compositions(int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    if (prefix.size() >= 2) out.push_back(prefix);
    return;
  }
  for (int k = 1; k <= total; ++k) {
    prefix.push_back(k);
    compositions(total - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Task> channels_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  std::uint64_t stream = 0;
  for (int n = 1; n <= o.n; ++n) {
    for (const auto& keep : nonempty_subsets(n)) {
      tasks.push_back([n, keep, rng = task_rng(o.seed, stream++)] {
        return partial_trace_checks(n, keep, rng);
      });
    }
  }
  tasks.push_back([rng = task_rng(o.seed, stream++)] { return canonicalization_checks(rng); });
  tasks.push_back(counterexample_checks);
  tasks.push_back([rng = task_rng(o.seed, stream++)] { return dilation_checks(rng); });
  tasks.push_back([rng = task_rng(o.seed, stream++)] { return determinism_checks(rng); });
  return tasks;
}

std::vector<Task> entanglement_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks = {reference_values};
  // Split the random states into chunks so they spread over workers.
  constexpr int kChunks = 5;
  for (int c = 0; c < kChunks; ++c) {
    tasks.push_back([rng = task_rng(o.seed, c)] {
      return random_state_checks(kRandomEntanglementStates / kChunks, rng);
    });
  }
  return tasks;
}

std::vector<Task> locc_tasks(const SuiteOptions& o) {
  std::vector<std::vector<int>> partitions;
  for (int total = 2; total <= o.n; ++total) {
    std::vector<int> prefix;
    compositions(total, prefix, partitions);
  }
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    tasks.push_back([parts = partitions[i], rng = task_rng(o.seed, i)] { return locc_checks(parts, rng); });
  }
  return tasks;
}

}  // namespace fermsim::verify
