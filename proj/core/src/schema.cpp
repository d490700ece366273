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

#include "fermsim/schema.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <regex>
#include <set>

namespace fermsim {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kEmbeddedSchemas[];
extern const int kEmbeddedSchemaCount;
}  // namespace detail

namespace {

using nlohmann::json;

const std::set<std::string>& validating_keywords() {
  static const std::set<std::string> k = {
      "type",    "required", "properties", "additionalProperties",
      "items",   "enum",     "minimum",    "maximum",
      "minItems", "maxItems", "pattern"};
  return k;
}

const std::set<std::string>& annotation_keywords() {
  static const std::set<std::string> k = {"$schema", "$id", "title", "description"};
  return k;
}

bool has_type(const json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  if (type == "number") return v.is_number();
  if (type == "integer") {
    if (v.is_number_integer()) return true;
    if (v.is_number_float()) {
      const double d = v.get<double>();
      return std::isfinite(d) && std::floor(d) == d;
    }
    return false;
  }
  throw SchemaError("unknown schema type " + type);
}

bool json_equal(const json& a, const json& b) {
  if (a.is_number() && b.is_number()) return a.get<double>() == b.get<double>();
  return a == b;
}

const std::regex& cached_regex(const std::string& pattern) {
  static std::mutex mu;
  static std::map<std::string, std::regex> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(pattern);
  if (it == cache.end()) it = cache.emplace(pattern, std::regex(pattern, std::regex::ECMAScript)).first;
  return it->second;
}

void validate(const json& v, const json& s, const std::string& path,
              std::vector<std::string>& errors) {
  auto fail = [&](const std::string& msg) {
    errors.push_back((path.empty() ? std::string("/") : path) + ": " + msg);
  };
  if (s.is_boolean()) {
    if (!s.get<bool>()) fail("not allowed");
    return;
  }
  if (auto it = s.find("type"); it != s.end()) {
    bool ok = false;
    if (it->is_array()) {
      for (const auto& t : *it) ok = ok || has_type(v, t.get<std::string>());
    } else {
      ok = has_type(v, it->get<std::string>());
    }
    if (!ok) {
      fail("expected type " + it->dump());
      return;
    }
  }
  if (auto it = s.find("enum"); it != s.end()) {
    bool ok = false;
    for (const auto& e : *it) ok = ok || json_equal(v, e);
    if (!ok) fail("value not in " + it->dump());
  }
  if (v.is_number()) {
    const double d = v.get<double>();
    if (auto it = s.find("minimum"); it != s.end() && d < it->get<double>()) {
      fail("below minimum " + it->dump());
    }
    if (auto it = s.find("maximum"); it != s.end() && d > it->get<double>()) {
      fail("above maximum " + it->dump());
    }
  }
  if (v.is_string()) {
    if (auto it = s.find("pattern"); it != s.end()) {
      if (!std::regex_search(v.get<std::string>(), cached_regex(it->get<std::string>()))) {
        fail("does not match " + it->get<std::string>());
      }
    }
  }
  if (v.is_array()) {
    const auto size = v.size();
    if (auto it = s.find("minItems"); it != s.end() && size < it->get<std::size_t>()) {
      fail("fewer than " + it->dump() + " items");
    }
    if (auto it = s.find("maxItems"); it != s.end() && size > it->get<std::size_t>()) {
      fail("more than " + it->dump() + " items");
    }
    if (auto it = s.find("items"); it != s.end()) {
      for (std::size_t i = 0; i < size; ++i) {
        validate(v[i], *it, path + "/" + std::to_string(i), errors);
      }
    }
  }
  if (v.is_object()) {
    if (auto it = s.find("required"); it != s.end()) {
      for (const auto& key : *it) {
        if (!v.contains(key.get<std::string>())) fail("missing " + key.get<std::string>());
      }
    }
    const json* props = nullptr;
    if (auto it = s.find("properties"); it != s.end()) props = &*it;
    const auto extra = s.find("additionalProperties");
    for (const auto& [key, value] : v.items()) {
      const std::string child = path + "/" + key;
      if (props && props->contains(key)) {
        validate(value, (*props)[key], child, errors);
      } else if (extra != s.end()) {
        validate(value, *extra, child, errors);
      }
    }
  }
}

void check_keywords(const json& s, const std::string& path) {
  if (s.is_boolean()) return;
  if (!s.is_object()) throw SchemaError("schema at " + path + " is not an object");
  for (const auto& [key, value] : s.items()) {
    if (annotation_keywords().count(key)) continue;
    if (!validating_keywords().count(key)) {
      throw SchemaError("unsupported schema keyword " + key + " at " + path);
    }
    if (key == "properties") {
      for (const auto& [name, sub] : value.items()) check_keywords(sub, path + "/properties/" + name);
    } else if (key == "items" || key == "additionalProperties") {
      check_keywords(value, path + "/" + key);
    }
  }
}

struct Registry {
  std::map<std::string, json, std::less<>> schemas;
};

const Registry& registry() {
  static std::once_flag flag;
  static Registry reg;
  std::call_once(flag, [] {
    for (int i = 0; i < detail::kEmbeddedSchemaCount; ++i) {
      const auto& [name, body] = detail::kEmbeddedSchemas[i];
      json parsed = json::parse(body);
      check_keywords(parsed, std::string(name));
      reg.schemas.emplace(std::string(name), std::move(parsed));
    }
  });
  return reg;
}

}  // namespace

std::vector<std::string> schema_names() {
  std::vector<std::string> out;
  for (const auto& [name, body] : registry().schemas) out.push_back(name);
  return out;
}

const nlohmann::json& schema(std::string_view name) {
  const auto& schemas = registry().schemas;
  auto it = schemas.find(name);
  if (it == schemas.end()) throw SchemaError("unknown schema " + std::string(name));
  return it->second;
}

void check_schema_keywords(const nlohmann::json& s) { check_keywords(s, "#"); }

std::vector<std::string> schema_errors(const nlohmann::json& doc, const nlohmann::json& s) {
  check_keywords(s, "#");
  std::vector<std::string> errors;
  validate(doc, s, "", errors);
  return errors;
}

void validate_or_throw(const nlohmann::json& doc, std::string_view name) {
  std::vector<std::string> errors;
  validate(doc, schema(name), "", errors);
  if (errors.empty()) return;
  std::string msg = std::string(name) + " document is invalid:";
  for (const auto& e : errors) msg += "\n  " + e;
  throw SchemaError(msg);
}

}  // namespace fermsim
