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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace fermsim {

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validates a subset of JSON Schema: type, required, properties,
// additionalProperties, items, enum, minimum, maximum, minItems, maxItems and
// pattern. Schemas using any other keyword are rejected when loaded.
std::vector<std::string> schema_names();
const nlohmann::json& schema(std::string_view name);

void check_schema_keywords(const nlohmann::json& schema);
std::vector<std::string> schema_errors(const nlohmann::json& doc,
                                       const nlohmann::json& schema);
void validate_or_throw(const nlohmann::json& doc, std::string_view name);

}  // namespace fermsim
