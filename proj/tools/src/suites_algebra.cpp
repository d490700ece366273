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
#include <numeric>

#include "fermsim/fock_core.hpp"
#include "fermsim/jordan_wigner.hpp"
#include "fermsim/linalg.hpp"
#include "fermsim/superselection.hpp"
#include "fermsim_tools/verify.hpp"
#include "helpers.hpp"

namespace fermsim::verify {
namespace {

constexpr double kAlgebraTol = 1e-12;

std::vector<Check> car_checks(int n) {
  const CarResiduals r = verify_car(n);
  double number = 0.0;
  for (int i = 1; i <= n; ++i) {
    const SparseMatrix ni = number_operator(i, n).sparse();
    for (std::size_t idx = 0; idx < fock_dimension(n); ++idx) {
      const Occupation s = occupation_of(idx, n);
      const Vector v = fock_vector(s);
      number = std::max(number, (ni * v - static_cast<double>(s[i - 1]) * v).cwiseAbs().maxCoeff());
    }
  }
  const std::string p = "n=" + std::to_string(n) + "/";
  return {below(p + "anticommutator", r.anticommutator, kAlgebraTol),
          below(p + "car", r.car, kAlgebraTol),
          below(p + "number_eigenvectors", number, kAlgebraTol)};
}

std::vector<Check> jwt_checks(int n, Rng rng) {
  const std::string p = "n=" + std::to_string(n) + "/";
  const SigmaIdentityResiduals s = pauli_from_fields_identities(n);
  std::vector<Check> out = {
      below(p + "sigma_x", s.x, kAlgebraTol),
      below(p + "sigma_y", s.y, kAlgebraTol),
      below(p + "sigma_z_parity_corrected", s.z_parity, kAlgebraTol),
      // With the lowering-matrix annihilator the literal form is -sigma^z.
      informational(below(p + "sigma_z_literal", s.z_literal, kAlgebraTol)),
  };

  double product = 0.0, adj = 0.0, matches_fock = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const FieldPolynomial a = random_polynomial(n, 3, 3, rng);
    const FieldPolynomial b = random_polynomial(n, 3, 3, rng);
    const Matrix ja = jwt_polynomial(a, n).to_dense();
    const Matrix jb = jwt_polynomial(b, n).to_dense();
    product = std::max(product, max_abs(jwt_polynomial(multiply(a, b), n).to_dense() - ja * jb));
    adj = std::max(adj, max_abs(jwt_polynomial(adjoint(a), n).to_dense() - ja.adjoint()));
    matches_fock = std::max(matches_fock, max_abs(ja - evaluate_polynomial(a, n).dense()));
  }
  out.push_back(below(p + "product_homomorphism", product, kAlgebraTol));
  out.push_back(below(p + "adjoint_homomorphism", adj, kAlgebraTol));
  out.push_back(below(p + "matches_fock_operators", matches_fock, kAlgebraTol));

  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<Matrix> a;
  for (int i = 1; i <= n; ++i) a.push_back(jwt_annihilator(i, pi, n).to_dense());
  const Eigen::Index d = a[0].rows();
  double car = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Matrix delta = (i == j ? 1.0 : 0.0) * Matrix::Identity(d, d);
      car = std::max(car, max_abs(a[i] * a[j].adjoint() + a[j].adjoint() * a[i] - delta));
      car = std::max(car, max_abs(a[i] * a[j] + a[j] * a[i]));
    }
  }
  out.push_back(below(label(p + "car_under_ordering", pi), car, kAlgebraTol));
  return out;
}

Count pow2(int e) { return Count(1) << e; }

Count fqt_d(int n) { return fqt_dimension(n).D; }

std::vector<Check> jellyfish_checks() {
  std::vector<Check> out;
  const std::vector<std::vector<int>> instances = {{1, 1, 1, 1}, {1, 1, 2, 2}, {2, 1, 3, 1}};
  for (const auto& n : instances) {
    const auto d = [&](int a, int b) { return fqt_d(n[a] + n[b]); };
    const PairDimensions pairs{d(0, 1), d(0, 2), d(0, 3), d(1, 2), d(1, 3), d(2, 3)};
    const JellyfishCheck c =
        jellyfish_dimension_check(fqt_d(n[0]), fqt_d(n[1]), fqt_d(n[2]), fqt_d(n[3]), pairs);
    out.push_back(matches(label("jellyfish/classes_vs_iterated", n), str(c.classes), str(c.iterated)));
    out.push_back(matches(label("jellyfish/iterated_vs_composite", n), str(c.iterated),
                        str(fqt_d(n[0] + n[1] + n[2] + n[3]))));
  }
  const JellyfishCheck local = jellyfish_dimension_check(4, 4, 4, 4, {16, 16, 16, 16, 16, 16});
  out.push_back(matches("jellyfish/local_qubits", str(local.classes), "256"));
  return out;
}

}  // namespace

std::vector<Task> car_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (int k = 1; k <= o.n; ++k) tasks.push_back([k] { return car_checks(k); });
  return tasks;
}

std::vector<Task> jwt_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (int k = 1; k <= o.n; ++k) {
    tasks.push_back([k, seed = o.seed] { return jwt_checks(k, task_rng(seed, k)); });
  }
  return tasks;
}

std::vector<Task> dimensions_tasks(const SuiteOptions& o) {
  const int n = o.n;
  std::vector<Task> tasks;
  tasks.push_back([n] {
    std::vector<Check> out;
    for (int k = 1; k <= 2 * n; ++k) {
      const FqtDimension dim = fqt_dimension(k);
      out.push_back(matches("state_dimension/n=" + std::to_string(k), str(dim.D), str(pow2(2 * k - 1))));
      out.push_back(matches("dimension_split/n=" + std::to_string(k), str(dim.D + dim.V),
                          str(dim.d * dim.d)));
      out.push_back(matches("bilocal_count/n=" + std::to_string(k), str(bilocal_effect_count(k)),
                          str(pow2(2 * k - 1))));
    }
    return out;
  });
  for (int k = 1; k <= std::min(n, 3); ++k) {
    tasks.push_back([k, seed = o.seed] {
      const std::string p = "rank/n=" + std::to_string(k);
      return std::vector<Check>{
          matches(p + "/sampled_states", std::to_string(sampled_state_space_rank(k, seed + k)),
                str(fqt_d(k))),
          matches(p + "/sector_basis", std::to_string(real_span_rank(sector_hermitian_basis(k))),
                str(fqt_d(k)))};
    });
  }
  tasks.push_back([n] {
    std::vector<Check> out;
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const MinimalSuperselectionCheck c = check_minimal_superselection(a, b);
        out.push_back(matches(label("minimal_superselection", {a, b}), str(c.composite_v),
                            str(c.lower_bound)));
      }
    }
    for (int a = 1; a <= std::min(n, 3); ++a) {
      for (int b = 1; b <= std::min(n, 3); ++b) {
        for (int c = 1; c <= std::min(n, 3); ++c) {
          const MaximalBilocalityCheck m = maximal_bilocality_check(a, b, c);
          out.push_back(matches(label("maximal_bilocality", {a, b, c}), str(m.maxbil), str(m.composite)));
        }
      }
    }
    return out;
  });
  tasks.push_back(jellyfish_checks);
  return tasks;
}

}  // namespace fermsim::verify
