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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "fermsim/channels.hpp"
#include "fermsim/circuit.hpp"
#include "fermsim/entanglement.hpp"
#include "fermsim/fock_core.hpp"
#include "fermsim/jordan_wigner.hpp"
#include "fermsim/types.hpp"

namespace fermsim {

using nlohmann::json;

// Every *_from_json validates against the matching schema and then checks
// the shape constraints a schema cannot express.
json matrix_to_json(const Matrix& m);  // {"re": [...], "im": [...]}
Matrix matrix_from_json(const json& j);

json field_polynomial_to_json(const FieldPolynomial& p, int n = 0);
FieldPolynomial field_polynomial_from_json(const json& j, int* n = nullptr);

json density_to_json(const Matrix& rho, int n);
Matrix density_from_json(const json& j, int* n = nullptr);

json kraus_map_to_json(const KrausMap& map);
KrausMap kraus_map_from_json(const json& j);

json pauli_polynomial_to_json(const PauliPolynomial& p);
PauliPolynomial pauli_polynomial_from_json(const json& j);

json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

json locc_protocol_to_json(const LoccProtocol& p);
LoccProtocol locc_protocol_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace fermsim
