// Copyright 2026 The bellkit Authors
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
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bellkit {

inline constexpr const char* kReportSchema = "bellkit-report/1";

/// Whether a case passes by staying under its threshold (an identity) or by
/// exceeding it (a control that must visibly break).
enum class Expect { Below, Above };

struct Case {
  std::string id;
  double residual = 0.0;
  double threshold = 0.0;
  Expect expect = Expect::Below;
  bool pass = false;
};

/// Outcome of one verification suite.
struct Report {
  std::string suite;
  std::map<std::string, std::string> params;
  double tolerance = 0.0;
  std::optional<std::uint64_t> seed;
  std::vector<Case> cases;
  std::int64_t wall_ms = 0;

  Report() = default;
  Report(std::string suite_id, double tol) : suite(std::move(suite_id)), tolerance(tol) {}

  /// Identity case: passes iff residual < tolerance.
  Case& check(std::string id, double residual);
  /// Identity case with its own threshold.
  Case& check_below(std::string id, double residual, double threshold);
  /// Control case: passes iff residual > threshold.
  Case& check_above(std::string id, double residual, double threshold);
  /// Appends every case of `other`, prefixing ids with `prefix`.
  void merge(const Report& other, const std::string& prefix = "");

  bool pass() const;
  /// Worst residual among identity cases; controls are ignored.
  double max_residual() const;
  const Case* find(const std::string& id) const;
  std::size_t failures() const;
};

/// Serializes a report as deterministic JSON (stable key order, shortest
/// round-trip floats). wall_ms is only written when include_timing is set.
std::string to_json(const Report& r, bool include_timing = false);

/// One line per case, for terminals.
std::string to_text(const Report& r);

}  // namespace bellkit
