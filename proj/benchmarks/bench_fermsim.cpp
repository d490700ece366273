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

#include <benchmark/benchmark.h>

#include <vector>

#include "fermsim/bk_encoding.hpp"
#include "fermsim/channels.hpp"
#include "fermsim/circuit.hpp"
#include "fermsim/compiler.hpp"
#include "fermsim/entanglement.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/jordan_wigner.hpp"
#include "fermsim/random.hpp"

namespace fermsim {
namespace {

constexpr std::uint64_t kSeed = 20260214;

void BM_VerifyCar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_car(n));
}
BENCHMARK(BM_VerifyCar)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_PartialTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(kSeed);
  const Matrix rho = random_fqt_state(n, rng);
  std::vector<int> keep;
  for (int i = 1; i <= n; i += 2) keep.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, keep, n));
}
BENCHMARK(BM_PartialTrace)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_MarginalOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(kSeed);
  const Matrix rho = random_fqt_state(n, rng);
  std::vector<int> keep;
  for (int i = 1; i <= n; i += 2) keep.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(marginal_oracle(rho, keep, n));
}
BENCHMARK(BM_MarginalOracle)->DenseRange(2, 4, 1)->Unit(benchmark::kMicrosecond);

void BM_JwtHoppingPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FieldPolynomial hop;
  for (int i = 1; i < n; ++i) {
    hop.terms.push_back({1.0, {{i, true}, {i + 1, false}}});
    hop.terms.push_back({1.0, {{i + 1, true}, {i, false}}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(jwt_polynomial(hop, n));
}
BENCHMARK(BM_JwtHoppingPolynomial)->DenseRange(4, 12, 4);

void BM_FermionicConcurrence(benchmark::State& state) {
  Rng rng(kSeed);
  const Matrix rho = random_fqt_state(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(fermionic_concurrence(rho));
}
BENCHMARK(BM_FermionicConcurrence);

void BM_BkEncode(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(kSeed);
  const std::uint64_t s = m == 64 ? rng() : rng() & ((std::uint64_t{1} << m) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(bk_encode(s, m));
}
BENCHMARK(BM_BkEncode)->RangeMultiplier(4)->Range(4, 64);

void BM_BkExtractionCircuit(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int j = 0; j < m; ++j) benchmark::DoNotOptimize(extraction_circuit(j, m));
  }
  state.counters["max_gates_bk"] = max_extraction_gates_bk(m);
  state.counters["max_gates_jwt"] = max_extraction_gates_jwt(m);
}
BENCHMARK(BM_BkExtractionCircuit)->RangeMultiplier(4)->Range(4, 64);

void BM_CompileRandomCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(kSeed);
  Circuit c;
  c.wire_type = WireType::kMode;
  c.n_wires = n;
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int a = 0; a + 1 < n; ++a) {
    c.gates.push_back(make_gate(GateKind::kGHat, {a, a + 1}));
    c.gates.push_back(make_gate(GateKind::kPhase, {a}, angle(rng)));
  }
  c.gates.push_back(make_gate(GateKind::kCPhase, {0, n - 1}, angle(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(compile_fqt_circuit(c));
}
BENCHMARK(BM_CompileRandomCircuit)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fermsim

BENCHMARK_MAIN();
