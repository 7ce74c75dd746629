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

#include "bellkit/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace bellkit {

Case& Report::check(std::string id, double residual) {
  return check_below(std::move(id), residual, tolerance);
}

Case& Report::check_below(std::string id, double residual, double threshold) {
  cases.push_back(Case{std::move(id), residual, threshold, Expect::Below, residual < threshold});
  return cases.back();
}

Case& Report::check_above(std::string id, double residual, double threshold) {
  cases.push_back(Case{std::move(id), residual, threshold, Expect::Above, residual > threshold});
  return cases.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.cases) {
    Case copy = c;
    copy.id = prefix + c.id;
    cases.push_back(std::move(copy));
  }
}

bool Report::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const Case& c) { return c.pass; });
}

double Report::max_residual() const {
  double m = 0.0;
  for (const auto& c : cases) {
    if (c.expect == Expect::Below) m = std::max(m, c.residual);
  }
  return m;
}

const Case* Report::find(const std::string& id) const {
  for (const auto& c : cases) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const Case& c) { return !c.pass; }));
}

std::string to_json(const Report& r, bool include_timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = r.suite;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["tolerance"] = r.tolerance;
  if (r.seed) {
    j["seed"] = *r.seed;
  } else {
    j["seed"] = nullptr;
  }
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["residual"] = c.residual;
    jc["threshold"] = c.threshold;
    jc["expect"] = c.expect == Expect::Below ? "below" : "above";
    jc["pass"] = c.pass;
    cases.push_back(std::move(jc));
  }
  j["cases"] = std::move(cases);
  j["pass"] = r.pass();
  if (include_timing) j["wall_ms"] = r.wall_ms;
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.cases.size()
     << " cases, " << r.failures() << " failed)\n";
  for (const auto& c : r.cases) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.id << "  residual=" << std::setprecision(3)
       << std::scientific << c.residual << (c.expect == Expect::Below ? " < " : " > ")
       << c.threshold << std::defaultfloat << "\n";
  }
  return os.str();
}

}  // namespace bellkit
