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

#include "fermsim/channels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fermsim/fock_core.hpp"
#include "fermsim/linalg.hpp"
#include "fermsim/superselection.hpp"

namespace fermsim {

namespace {

constexpr double kDropTol = 1e-14;

Eigen::VectorXd parity_signs(int n) {
  const std::size_t dim = fock_dimension(n);
  Eigen::VectorXd p(static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    p(static_cast<Eigen::Index>(x)) = parity_of_index(x) ? -1.0 : 1.0;
  }
  return p;
}

std::vector<int> sorted_keep(std::span<const int> keep, int n) {
  std::vector<int> k(keep.begin(), keep.end());
  std::sort(k.begin(), k.end());
  if (k.empty()) throw std::invalid_argument("keep set must not be empty");
  if (std::adjacent_find(k.begin(), k.end()) != k.end()) {
    throw std::invalid_argument("keep set has repeated modes");
  }
  if (k.front() < 1 || k.back() > n) {
    throw std::invalid_argument("keep set outside 1..n");
  }
  return k;
}

}  // namespace

void KrausMap::validate() const {
  check_mode_count(n_in);
  check_mode_count(n_out);
  if (kraus.empty()) throw std::invalid_argument("Kraus map has no operators");
  const auto din = static_cast<Eigen::Index>(fock_dimension(n_in));
  const auto dout = static_cast<Eigen::Index>(fock_dimension(n_out));
  for (const KrausTerm& term : kraus) {
    if (term.sign != 1 && term.sign != -1) {
      throw std::invalid_argument("Kraus sign must be +1 or -1");
    }
    if (term.op.rows() != dout || term.op.cols() != din) {
      throw std::invalid_argument("Kraus operator shape does not match n_in/n_out");
    }
  }
}

Matrix apply_channel(const KrausMap& map, const Matrix& rho) {
  map.validate();
  const auto din = static_cast<Eigen::Index>(fock_dimension(map.n_in));
  if (rho.rows() != din || rho.cols() != din) {
    throw std::invalid_argument("apply: state does not match n_in");
  }
  const auto dout = static_cast<Eigen::Index>(fock_dimension(map.n_out));
  Matrix out = Matrix::Zero(dout, dout);
  for (const KrausTerm& term : map.kraus) {
    out += static_cast<double>(term.sign) * (term.op * rho * term.op.adjoint());
  }
  return out;
}

double determinism_residual(const KrausMap& map) {
  map.validate();
  const auto din = static_cast<Eigen::Index>(fock_dimension(map.n_in));
  Matrix sum = Matrix::Zero(din, din);
  for (const KrausTerm& term : map.kraus) {
    sum += static_cast<double>(term.sign) * (term.op.adjoint() * term.op);
  }
  return max_abs(sum - Matrix::Identity(din, din));
}

EvenOddParts split_even_odd(const Matrix& k, int n_in, int n_out) {
  const Eigen::VectorXd pin = parity_signs(n_in);
  const Eigen::VectorXd pout = parity_signs(n_out);
  if (k.rows() != pout.size() || k.cols() != pin.size()) {
    throw std::invalid_argument("split_even_odd: shape does not match modes");
  }
  const Matrix conj = pout.cast<Complex>().asDiagonal() * k *
                      pin.cast<Complex>().asDiagonal();
  return {0.5 * (k + conj), 0.5 * (k - conj)};
}

int operator_parity(const Matrix& k, int n_in, int n_out, double tol) {
  const EvenOddParts parts = split_even_odd(k, n_in, n_out);
  const bool has_even = max_abs(parts.even) > tol;
  const bool has_odd = max_abs(parts.odd) > tol;
  if (has_even && has_odd) return -1;
  return has_odd ? 1 : 0;
}

KrausMap canonicalize(const KrausMap& map) {
  map.validate();
  KrausMap out{map.n_in, map.n_out, {}};
  for (const KrausTerm& term : map.kraus) {
    EvenOddParts parts = split_even_odd(term.op, map.n_in, map.n_out);
    if (max_abs(parts.even) > kDropTol) out.kraus.push_back({term.sign, parts.even});
  }
  for (const KrausTerm& term : map.kraus) {
    EvenOddParts parts = split_even_odd(term.op, map.n_in, map.n_out);
    if (max_abs(parts.odd) > kDropTol) out.kraus.push_back({term.sign, parts.odd});
  }
  return out;
}

KrausMap extend_with_ancilla(const KrausMap& map, int ancilla_modes,
                             bool ancilla_first) {
  map.validate();
  if (map.n_in != map.n_out) {
    throw std::invalid_argument("extend_with_ancilla needs n_in == n_out");
  }
  if (ancilla_modes < 0) throw std::invalid_argument("negative ancilla count");
  if (ancilla_modes == 0) return map;
  const int n = map.n_in + ancilla_modes;
  std::vector<int> modes(static_cast<std::size_t>(map.n_in));
  std::iota(modes.begin(), modes.end(), ancilla_first ? ancilla_modes + 1 : 1);
  KrausMap out{n, n, {}};
  for (const KrausTerm& term : map.kraus) {
    out.kraus.push_back({term.sign, embed_field_operator(term.op, modes, n)});
  }
  return out;
}

int reorder_exponent(std::size_t s, std::size_t t, std::span<const int> keep,
                     int n) {
  const std::vector<int> k = sorted_keep(keep, n);
  const auto bit = [n](int mode) { return std::size_t{1} << (n - mode); };
  const auto differs = [&](int mode) {
    return ((s ^ t) & bit(mode)) ? 1 : 0;
  };
  int exponent = 0;
  for (int traced = 1; traced <= n; ++traced) {
    if (std::binary_search(k.begin(), k.end(), traced)) continue;
    if (!differs(traced)) continue;
    for (int kept : k) {
      if (kept < traced) exponent += differs(kept);
    }
  }
  return exponent;
}

Matrix partial_trace(const Matrix& rho, std::span<const int> keep, int n) {
  check_mode_count(n);
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("partial_trace: state does not match n");
  }
  const std::vector<int> k = sorted_keep(keep, n);
  const int nk = static_cast<int>(k.size());
  std::vector<int> traced;
  for (int m = 1; m <= n; ++m) {
    if (!std::binary_search(k.begin(), k.end(), m)) traced.push_back(m);
  }
  const auto bit = [n](int mode) { return std::size_t{1} << (n - mode); };
  const auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
    std::size_t x = 0;
    for (int a = 0; a < nk; ++a) {
      if ((kept_bits >> (nk - 1 - a)) & 1u) x |= bit(k[a]);
    }
    const int nt = static_cast<int>(traced.size());
    for (int a = 0; a < nt; ++a) {
      if ((traced_bits >> (nt - 1 - a)) & 1u) x |= bit(traced[a]);
    }
    return x;
  };

  // rho = sum_st c_st F_st with c_st = sign(s,t) rho_st. Terms with s_k != t_k
  // on a traced mode vanish, the rest keep c_st and lose the traced factors,
  // which leaves F'_{s't'} = sign'(s',t') |s'><t'| on the kept modes.
  const auto kdim = static_cast<Eigen::Index>(fock_dimension(nk));
  const std::size_t tdim = std::size_t{1} << traced.size();
  Matrix out = Matrix::Zero(kdim, kdim);
  for (Eigen::Index sp = 0; sp < kdim; ++sp) {
    for (Eigen::Index tp = 0; tp < kdim; ++tp) {
      const int local_sign = field_product_sign(static_cast<std::size_t>(sp),
                                                static_cast<std::size_t>(tp), nk);
      Complex acc = 0.0;
      for (std::size_t u = 0; u < tdim; ++u) {
        const std::size_t s = compose(static_cast<std::size_t>(sp), u);
        const std::size_t t = compose(static_cast<std::size_t>(tp), u);
        const Complex v = rho(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t));
        if (v == Complex{}) continue;
        acc += static_cast<double>(field_product_sign(s, t, n)) * v;
      }
      out(sp, tp) = static_cast<double>(local_sign) * acc;
    }
  }
  return out;
}

Matrix marginal_oracle(const Matrix& rho, std::span<const int> keep, int n) {
  check_mode_count(n);
  const std::vector<int> k = sorted_keep(keep, n);
  const int nk = static_cast<int>(k.size());
  const std::vector<Matrix> basis = sector_hermitian_basis(nk);
  const auto m = static_cast<Eigen::Index>(basis.size());
  RealMatrix gram(m, m);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Matrix embedded = embed_field_operator(basis[i], k, n);
    rhs(i) = (rho * embedded).trace().real();
    for (Eigen::Index j = 0; j < m; ++j) {
      gram(i, j) = (basis[i] * basis[j]).trace().real();
    }
  }
  Eigen::ColPivHouseholderQR<RealMatrix> solver(gram);
  if (solver.rank() != m) {
    throw std::runtime_error("marginal_oracle: effect family is not spanning");
  }
  const Eigen::VectorXd x = solver.solve(rhs);
  const auto kdim = static_cast<Eigen::Index>(fock_dimension(nk));
  Matrix sigma = Matrix::Zero(kdim, kdim);
  for (Eigen::Index i = 0; i < m; ++i) sigma += x(i) * basis[i];
  return sigma;
}

namespace {

int ceil_log2(int count) {
  int bits = 0;
  while ((1 << bits) < count) ++bits;
  return bits;
}

// Fock-basis index lists of the even and odd ancilla strings, ascending.
std::vector<std::size_t> strings_of_parity(int m, int parity) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < (std::size_t{1} << m); ++x) {
    if (parity_of_index(x) == parity) out.push_back(x);
  }
  return out;
}

// The creator product (phi_1^dag)^{s_1} ... (phi_M^dag)^{s_M} on the ancilla
// modes, as a local operator: it maps the vacuum to |s>.
Matrix ancilla_creator(std::size_t s, int m) {
  const Occupation occ = occupation_of(s, m);
  FockOperator op = identity_operator(m);
  for (int i = 1; i <= m; ++i) {
    if (occ[i - 1]) op = op * creator(i, m);
  }
  return op.dense();
}

}  // namespace

Dilation dilate(const KrausMap& input) {
  input.validate();
  if (input.n_in != input.n_out) {
    throw std::invalid_argument("dilate: only maps with n_in == n_out are supported");
  }
  for (const KrausTerm& term : input.kraus) {
    if (term.sign != 1) {
      throw std::invalid_argument("dilate: map has a negative Kraus sign");
    }
  }
  const KrausMap map = canonicalize(input);
  std::vector<const Matrix*> evens, odds;
  for (const KrausTerm& term : map.kraus) {
    const int p = operator_parity(term.op, map.n_in, map.n_out);
    (p == 1 ? odds : evens).push_back(&term.op);
  }
  Dilation d;
  d.system_modes = map.n_in;
  d.even_count = static_cast<int>(evens.size());
  d.odd_count = static_cast<int>(odds.size());
  d.ancilla_modes = std::max(ceil_log2(d.even_count), ceil_log2(d.odd_count)) + 1;
  const int n = d.system_modes + d.ancilla_modes;
  if (n > kMaxDenseModes) {
    throw std::length_error("dilate: system plus ancilla exceeds dense limit");
  }
  std::vector<int> system(static_cast<std::size_t>(d.system_modes));
  std::iota(system.begin(), system.end(), 1);
  std::vector<int> ancilla(static_cast<std::size_t>(d.ancilla_modes));
  std::iota(ancilla.begin(), ancilla.end(), d.system_modes + 1);

  const auto even_strings = strings_of_parity(d.ancilla_modes, 0);
  const auto odd_strings = strings_of_parity(d.ancilla_modes, 1);
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  d.single_kraus = Matrix::Zero(dim, dim);
  const auto add = [&](const Matrix& op, std::size_t string) {
    d.single_kraus += embed_field_operator(op, system, n) *
                      embed_field_operator(ancilla_creator(string, d.ancilla_modes),
                                           ancilla, n);
  };
  for (std::size_t i = 0; i < evens.size(); ++i) add(*evens[i], even_strings[i]);
  for (std::size_t i = 0; i < odds.size(); ++i) add(*odds[i], odd_strings[i]);
  d.ancilla_state = vacuum_projector(d.ancilla_modes).dense();
  return d;
}

Matrix apply_dilation(const Dilation& d, const Matrix& rho) {
  const int n = d.system_modes + d.ancilla_modes;
  const Matrix joint = kron(rho, d.ancilla_state);
  const Matrix evolved = d.single_kraus * joint * d.single_kraus.adjoint();
  std::vector<int> keep(static_cast<std::size_t>(d.system_modes));
  std::iota(keep.begin(), keep.end(), 1);
  return partial_trace(evolved, keep, n);
}

}  // namespace fermsim
