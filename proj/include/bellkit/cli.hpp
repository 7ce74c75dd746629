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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bellkit/linalg.hpp"
#include "bellkit/report.hpp"

namespace bellkit {

inline constexpr double kToleranceFloor = 1e-15;

/// Parameters shared by the `verify` suites. Unset optionals fall back to a
/// per-suite default.
struct SuiteOptions {
  std::string family = "qudit";
  std::optional<int> d;
  std::optional<std::size_t> n;
  /// 0 runs every k in [1, d-1].
  int k = 0;
  std::size_t trials = 10;
  std::size_t samples = 100;
  std::string gate = "bell";
  std::string variant;
  std::string form = "22";
  std::string m = "unitary";
  std::string eps;
  std::string eta;
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
};

/// The suite names accepted by `verify`, in help order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws DomainError for unknown suites or bad parameters.
Report run_suite(std::string_view name, const SuiteOptions& opt);

/// Seed used when --seed is absent: BELLKIT_SEED if set, else 1. Throws
/// DomainError when the variable is not an unsigned integer.
std::uint64_t default_seed();

/// Entry point for the bellkit executable. Returns 0 when every case passes,
/// 1 when any case fails and 2 for usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bellkit
