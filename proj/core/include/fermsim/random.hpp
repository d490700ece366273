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

#include <cstdint>
#include <random>

#include "fermsim/types.hpp"

namespace fermsim {

using Rng = std::mt19937_64;

Matrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);
Matrix random_unitary(Eigen::Index d, Rng& rng);
// Density matrix of the given rank (0 means full rank), unit trace.
Matrix random_density(Eigen::Index d, Rng& rng, Eigen::Index rank = 0);
Vector random_unit_vector(Eigen::Index d, Rng& rng);

// Random parity-superselected state on n modes with unit trace. With
// pure_sector >= 0 all weight sits in that sector.
Matrix random_fqt_state(int n, Rng& rng, int pure_sector = -1);
// Random pure state supported on a single parity sector.
Vector random_fqt_pure_state(int n, Rng& rng, int sector);
// Random operator with definite parity (0 even, 1 odd) on n_in -> n_out modes.
Matrix random_parity_operator(int n_in, int n_out, int parity, Rng& rng);

}  // namespace fermsim
