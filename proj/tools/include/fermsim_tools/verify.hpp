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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fermsim::verify {

enum class Relation { kBelow, kAbove, kEqual };

// One named check. kBelow passes when value < bound, kAbove when value >
// bound. kEqual compares the exact strings actual and expected.
struct Check {
  std::string name;
  Relation relation = Relation::kBelow;
  double value = 0.0;
  double bound = 0.0;
  std::string actual;
  std::string expected;
  bool gating = true;

  bool pass() const;
};

Check below(std::string name, double value, double bound);
Check above(std::string name, double value, double bound);
Check matches(std::string name, const std::string& actual,
            const std::string& expected);
Check informational(Check c);

struct SuiteOptions {
  int n = 0;  // 0 selects the suite default
  int m = 0;
  std::optional<double> tol;  // replaces the bound of every kBelow check
  std::uint64_t seed = 7;
  int jobs = 1;
};

struct SuiteReport {
  std::string suite;
  SuiteOptions options;
  std::vector<Check> checks;
  nlohmann::json extra = nlohmann::json::object();

  bool pass() const;
  int failures() const;
};

using Task = std::function<std::vector<Check>()>;

// Runs tasks on up to jobs threads and concatenates their checks in task
// order.
std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, SuiteOptions options);

nlohmann::json report_to_json(const SuiteReport& report);

// Task lists per suite, with resolved options.
std::vector<Task> car_tasks(const SuiteOptions& o);
std::vector<Task> jwt_tasks(const SuiteOptions& o);
std::vector<Task> channels_tasks(const SuiteOptions& o);
std::vector<Task> dimensions_tasks(const SuiteOptions& o);
std::vector<Task> universal_tasks(const SuiteOptions& o);
std::vector<Task> bk_tasks(const SuiteOptions& o);
std::vector<Task> entanglement_tasks(const SuiteOptions& o);
std::vector<Task> locc_tasks(const SuiteOptions& o);

nlohmann::json bk_gate_count_table(int m_max);

}  // namespace fermsim::verify
