// Copyright 2026 The qubench developers
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

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qubench {

/// Metric taxonomy panels. Every emitted record is tagged with exactly one.
enum class MetricCategory {
  Hardware,
  CircuitMetric,
  Resource,
  Performance,
  Complexity,
  Application,
};

inline const char* to_string(MetricCategory c) {
  switch (c) {
    case MetricCategory::Hardware: return "hardware";
    case MetricCategory::CircuitMetric: return "circuit";
    case MetricCategory::Resource: return "resource";
    case MetricCategory::Performance: return "performance";
    case MetricCategory::Complexity: return "complexity";
    case MetricCategory::Application: return "application";
  }
  return "?";
}

inline MetricCategory metric_category_from_string(const std::string& s) {
  if (s == "hardware") return MetricCategory::Hardware;
  if (s == "circuit") return MetricCategory::CircuitMetric;
  if (s == "resource") return MetricCategory::Resource;
  if (s == "performance") return MetricCategory::Performance;
  if (s == "complexity") return MetricCategory::Complexity;
  if (s == "application") return MetricCategory::Application;
  throw std::invalid_argument("unknown metric category: " + s);
}

/// One per-module key/value observation, numeric or textual.
struct MetricRecord {
  std::string module;
  std::string key;
  std::variant<double, std::string> value;
  MetricCategory category = MetricCategory::Application;
  std::optional<std::string> unit;

  bool is_number() const { return std::holds_alternative<double>(value); }
  double number() const { return std::get<double>(value); }
  const std::string& text() const { return std::get<std::string>(value); }
};

/// Append-only metric log. Aggregation is a separate reporting step.
class MetricLog {
 public:
  void append(MetricRecord rec) { records_.push_back(std::move(rec)); }

  const std::vector<MetricRecord>& records() const { return records_; }

  /// All records for (module, key), in insertion order.
  std::vector<MetricRecord> find(const std::string& module,
                                 const std::string& key) const {
    std::vector<MetricRecord> out;
    for (const auto& r : records_)
      if (r.module == module && r.key == key) out.push_back(r);
    return out;
  }

  std::vector<MetricRecord> by_category(MetricCategory cat) const {
    std::vector<MetricRecord> out;
    for (const auto& r : records_)
      if (r.category == cat) out.push_back(r);
    return out;
  }

 private:
  std::vector<MetricRecord> records_;
};

}  // namespace qubench
