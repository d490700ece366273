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

#include <map>
#include <numeric>
#include <stdexcept>

#include "fermsim/entanglement.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/linalg.hpp"

namespace fermsim {

int LoccProtocol::total_modes() const {
  return std::accumulate(party_modes.begin(), party_modes.end(), 0);
}

int LoccProtocol::first_mode(int party) const {
  if (party < 0 || party >= static_cast<int>(party_modes.size())) {
    throw std::out_of_range("party index out of range");
  }
  return 1 + std::accumulate(party_modes.begin(), party_modes.begin() + party, 0);
}

void LoccProtocol::validate() const {
  if (party_modes.size() < 2) throw std::invalid_argument("LOCC needs two or more parties");
  for (int m : party_modes) {
    if (m < 1) throw std::invalid_argument("every party needs at least one mode");
  }
  if (total_modes() > kMaxDenseModes) {
    throw std::invalid_argument("LOCC protocol exceeds the dense mode limit");
  }
  std::size_t previous_outcomes = 1;
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    const LoccRound& round = rounds[r];
    if (round.party < 0 || round.party >= static_cast<int>(party_modes.size())) {
      throw std::invalid_argument("round names an unknown party");
    }
    if (round.branches.empty()) throw std::invalid_argument("round has no instrument");
    if (round.branches.size() != 1 && round.branches.size() != previous_outcomes) {
      throw std::invalid_argument("round " + std::to_string(r) +
                                  " does not have one branch per previous outcome");
    }
    const std::size_t outcomes = round.branches.front().size();
    for (const auto& instrument : round.branches) {
      if (instrument.size() != outcomes || instrument.empty()) {
        throw std::invalid_argument("branches of a round must share the outcome count");
      }
      for (const KrausMap& map : instrument) {
        map.validate();
        const int k = party_modes[static_cast<std::size_t>(round.party)];
        if (map.n_in != k || map.n_out != k) {
          throw std::invalid_argument("non-local round: map does not act on the party's modes");
        }
        for (const KrausTerm& t : map.kraus) {
          if (t.sign != 1) throw std::invalid_argument("LOCC maps need positive Kraus signs");
        }
      }
    }
    previous_outcomes = outcomes;
  }
}

int QubitProtocol::classical_bits() const {
  int bits = 0;
  for (const QubitRound& r : rounds) bits += r.parity_bits;
  return bits;
}

QubitProtocol locc_translate(const LoccProtocol& protocol) {
  protocol.validate();
  QubitProtocol out;
  out.n_qubits = protocol.total_modes();
  for (const LoccRound& round : protocol.rounds) {
    QubitRound q;
    q.party = round.party;
    q.first_wire = protocol.first_mode(round.party) - 1;
    q.wires = protocol.party_modes[static_cast<std::size_t>(round.party)];
    // An odd Kraus operator of this party carries the string of every earlier
    // mode, which the earlier parties apply once they learn the parity bit.
    for (int w = 0; w < q.first_wire; ++w) q.correction_wires.push_back(w);
    for (const auto& instrument : round.branches) {
      std::vector<std::vector<QubitKrausOp>> outcomes;
      for (const KrausMap& map : instrument) {
        std::vector<QubitKrausOp> ops;
        for (const KrausTerm& t : canonicalize(map).kraus) {
          const int p = operator_parity(t.op, map.n_in, map.n_out);
          ops.push_back({p, t.op});
        }
        outcomes.push_back(std::move(ops));
      }
      q.branches.push_back(std::move(outcomes));
    }
    out.rounds.push_back(std::move(q));
  }
  return out;
}

namespace {

using Branches = std::map<std::size_t, Matrix>;

template <typename ApplyOutcome>
Matrix run_rounds(std::size_t rounds, const Matrix& rho, ApplyOutcome&& apply_outcome) {
  Branches current;
  current.emplace(0, rho);
  for (std::size_t r = 0; r < rounds; ++r) {
    Branches next;
    for (const auto& [previous, sigma] : current) {
      apply_outcome(r, previous, sigma, next);
    }
    current = std::move(next);
  }
  Matrix total = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& [outcome, sigma] : current) total += sigma;
  return total;
}

void accumulate(Branches& into, std::size_t key, const Matrix& value) {
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(key, value);
  } else {
    it->second += value;
  }
}

}  // namespace

Matrix apply_fermionic_protocol(const LoccProtocol& protocol, const Matrix& rho) {
  protocol.validate();
  const int n = protocol.total_modes();
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("state does not match the protocol's modes");
  }
  return run_rounds(protocol.rounds.size(), rho,
                    [&](std::size_t r, std::size_t previous, const Matrix& sigma,
                        Branches& next) {
    const LoccRound& round = protocol.rounds[r];
    const auto& instrument =
        round.branches.size() == 1 ? round.branches.front() : round.branches[previous];
    std::vector<int> modes(static_cast<std::size_t>(
        protocol.party_modes[static_cast<std::size_t>(round.party)]));
    std::iota(modes.begin(), modes.end(), protocol.first_mode(round.party));
    for (std::size_t o = 0; o < instrument.size(); ++o) {
      Matrix out = Matrix::Zero(dim, dim);
      for (const KrausTerm& t : canonicalize(instrument[o]).kraus) {
        const Matrix k = embed_field_operator(t.op, modes, n);
        out += k * sigma * k.adjoint();
      }
      accumulate(next, o, out);
    }
  });
}

Matrix apply_qubit_protocol(const QubitProtocol& protocol, const Matrix& rho) {
  const int n = protocol.n_qubits;
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("state does not match the protocol's qubits");
  }
  return run_rounds(protocol.rounds.size(), rho,
                    [&](std::size_t r, std::size_t previous, const Matrix& sigma,
                        Branches& next) {
    const QubitRound& round = protocol.rounds[r];
    const auto& instrument =
        round.branches.size() == 1 ? round.branches.front() : round.branches[previous];
    std::vector<int> wires(static_cast<std::size_t>(round.wires));
    std::iota(wires.begin(), wires.end(), round.first_wire);
    Matrix z_string = Matrix::Identity(dim, dim);
    const Matrix z = Eigen::Vector2d(1.0, -1.0).cast<Complex>().asDiagonal();
    for (int w : round.correction_wires) {
      const std::vector<int> one = {w};
      apply_qubit_operator(z_string, z, one, n);
    }
    for (std::size_t o = 0; o < instrument.size(); ++o) {
      Matrix out = Matrix::Zero(dim, dim);
      for (const QubitKrausOp& op : instrument[o]) {
        Matrix k = embed_qubit_operator(op.local, wires, n);
        if (op.parity_bit) k = z_string * k;
        out += k * sigma * k.adjoint();
      }
      accumulate(next, o, out);
    }
  });
}

}  // namespace fermsim
