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

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fermsim/types.hpp"

namespace fermsim {

using Count = boost::multiprecision::cpp_int;

// Basis indices sorted even sector first, ascending inside each sector.
// Computed once per n and cached.
const std::vector<std::size_t>& sector_permutation(int n);

struct SectorSplit {
  Matrix rho0;  // normalized even block, zero when p0 == 0
  Matrix rho1;  // normalized odd block, zero when p1 == 0
  double p0 = 0.0;
  double p1 = 0.0;
  double off_block_residual = 0.0;
};

SectorSplit split_sectors(const Matrix& rho, int n, double tol = kDefaultTol);

struct ValidityReport {
  bool valid = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double trace = 0.0;
  double hermiticity_residual = 0.0;
  double commutator_residual = 0.0;
  std::string reason;
};

ValidityReport is_valid_fqt_state(const Matrix& rho, int n,
                                  double tol = kDefaultTol);
ValidityReport is_valid_fqt_effect(const Matrix& a, int n,
                                   double tol = kDefaultTol);

// Hermitian matrix units of both parity blocks: a real basis of the
// superselected operators, 2^{2n-1} elements.
std::vector<Matrix> sector_hermitian_basis(int n);

struct FqtDimension {
  Count D;  // state-space dimension
  Count V;  // dimension of the superselected-away part of the qubit space
  Count d;  // Hilbert space dimension
};

FqtDimension fqt_dimension(int n);
// Real span dimension of many random valid states, for the rank check.
int sampled_state_space_rank(int n, std::uint64_t seed);

struct ConstraintBounds {
  Count lower;
  Count upper;
};

ConstraintBounds constraint_bounds(const Count& DA, const Count& VA,
                                   const Count& DB, const Count& VB,
                                   const Count& DAB);

struct MinimalSuperselectionCheck {
  Count composite_v;
  Count lower_bound;
  bool holds = false;
};

MinimalSuperselectionCheck check_minimal_superselection(int n, int m);

Count binomial(int n, int k);
Count bilocal_effect_count(int n);

struct PairDimensions {
  Count AB, AC, AD, BC, BD, CD;
};

struct JellyfishCheck {
  Count iterated;  // D_ABCD from iterated maximal bilocality
  Count classes;   // D_ABCD from the five product classes
  bool equal = false;
};

JellyfishCheck jellyfish_dimension_check(const Count& DA, const Count& DB,
                                         const Count& DC, const Count& DD,
                                         const PairDimensions& pairs);

struct MaximalBilocalityCheck {
  Count composite;
  Count maxbil;
  bool holds = false;
};

// Tripartite maximal bilocality of three LFM systems.
MaximalBilocalityCheck maximal_bilocality_check(int na, int nb, int nc);

}  // namespace fermsim
