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

#include "fermsim_tools/verify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace fermsim::verify {

bool Check::pass() const {
  switch (relation) {
    case Relation::kBelow: return value < bound;
    case Relation::kAbove: return value > bound;
    case Relation::kEqual: return actual == expected;
  }
  return false;
}

Check below(std::string name, double value, double bound) {
  return {std::move(name), Relation::kBelow, value, bound, {}, {}, true};
}

Check above(std::string name, double value, double bound) {
  return {std::move(name), Relation::kAbove, value, bound, {}, {}, true};
}

Check matches(std::string name, const std::string& actual,
            const std::string& expected) {
  return {std::move(name), Relation::kEqual, 0.0, 0.0, actual, expected, true};
}

Check informational(Check c) {
  c.gating = false;
  return c;
}

bool SuiteReport::pass() const { return failures() == 0; }

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) {
    return c.gating && !c.pass();
  }));
}

std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<Check>> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<Check> out;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) {
      out.push_back(matches("task " + std::to_string(i) + " raised", errors[i], "no exception"));
    }
    out.insert(out.end(), results[i].begin(), results[i].end());
  }
  return out;
}

namespace {

struct SuiteEntry {
  const char* name;
  std::vector<Task> (*tasks)(const SuiteOptions&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"car", car_tasks},
      {"jwt", jwt_tasks},
      {"channels", channels_tasks},
      {"dimensions", dimensions_tasks},
      {"universal", universal_tasks},
      {"bk", bk_tasks},
      {"entanglement", entanglement_tasks},
      {"locc", locc_tasks},
  };
  return entries;
}

int default_n(const std::string& suite) {
  if (suite == "car") return 8;
  if (suite == "channels" || suite == "locc") return 4;
  if (suite == "dimensions") return 5;
  if (suite == "entanglement") return 2;
  return 6;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, SuiteOptions options) {
  const auto& entries = registry();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const SuiteEntry& e) { return name == e.name; });
  if (it == entries.end()) throw std::invalid_argument("unknown suite: " + name);
  if (options.n <= 0) options.n = default_n(name);
  if (options.m <= 0) options.m = 64;
  if (options.tol && !(*options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  SuiteReport report;
  report.suite = name;
  report.options = options;
  report.checks = run_tasks(it->tasks(options), options.jobs);
  if (options.tol) {
    for (Check& c : report.checks) {
      if (c.relation == Relation::kBelow) c.bound = *options.tol;
    }
  }
  if (name == "bk") report.extra["gate_counts"] = bk_gate_count_table(options.m);
  return report;
}

nlohmann::json report_to_json(const SuiteReport& report) {
  using nlohmann::json;
  json checks = json::array();
  for (const Check& c : report.checks) {
    json j;
    j["name"] = c.name;
    switch (c.relation) {
      case Relation::kBelow:
      case Relation::kAbove:
        j["relation"] = c.relation == Relation::kBelow ? "<" : ">";
        j["value"] = c.value;
        j["tolerance"] = c.bound;
        break;
      case Relation::kEqual:
        j["relation"] = "==";
        j["actual"] = c.actual;
        j["expected"] = c.expected;
        break;
    }
    j["gating"] = c.gating;
    j["pass"] = c.pass();
    checks.push_back(std::move(j));
  }
  json out;
  out["suite"] = report.suite;
  out["seed"] = report.options.seed;
  out["params"] = {{"n", report.options.n}, {"m", report.options.m}};
  if (report.options.tol) out["params"]["tol"] = *report.options.tol;
  out["checks"] = std::move(checks);
  out["failures"] = report.failures();
  out["pass"] = report.pass();
  if (!report.extra.empty()) out["extra"] = report.extra;
  return out;
}

}  // namespace fermsim::verify
