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


// Prints one PASS/FAIL line per acceptance criterion and exits non-zero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/braid.hpp"
#include "bellkit/cli.hpp"
#include "bellkit/teleport.hpp"
#include "bellkit/verify.hpp"

namespace bk = bellkit;

namespace {

constexpr double kTol = 1e-12;

// Worst tolerance-level identity residual and whether every case (controls
// and statistical cases included) passed.
struct Tally {
  bool ok = true;
  double worst = 0.0;
  std::string note;

  void add(const bk::Report& r) {
    ok = ok && r.pass();
    for (const auto& c : r.cases) {
      if (c.expect == bk::Expect::Below && c.threshold <= r.tolerance) {
        worst = std::max(worst, c.residual);
      }
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (note.empty()) note = what;
    }
  }
  void below(double residual, double threshold, const std::string& what) {
    worst = std::max(worst, residual);
    require(residual < threshold, what);
  }
};

Tally criterion1() {
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<bk::BasisFamily> fams = {bk::BasisFamily::qubit_bell()};
  for (int d = 2; d <= 5; ++d) fams.push_back(bk::BasisFamily::qudit_bell(d));
  for (std::size_t n = 1; n <= 3; ++n) fams.push_back(bk::BasisFamily::multi_bell(n));
  for (const auto& f : fams) {
    t.add(bk::gram_check(f, kTol));
    t.add(bk::completeness_check(f, kTol));
    t.require(f.size() == f.dim, "family size");
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.require(secs < 10.0, "runtime over 10 s");
  t.note += (t.note.empty() ? "" : "; ") + std::string("runtime ") + std::to_string(secs) + " s";
  return t;
}

Tally criterion2() {
  Tally t;
  std::vector<bk::BasisFamily> fams;
  for (int d = 2; d <= 4; ++d) fams.push_back(bk::BasisFamily::qudit_bell(d));
  fams.push_back(bk::BasisFamily::multi_bell(2));
  std::uint64_t seed = 2;
  for (const auto& f : fams) {
    const bk::Report r = bk::basis_theorem_suite(f, 100, seed++, kTol);
    t.add(r);
    const bk::Case* mis = r.find("misclassified");
    t.require(mis != nullptr && mis->residual == 0.0, "misclassification");
  }
  return t;
}

Tally criterion3() {
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n) {
    const bk::Circuit c = bk::twist_decomposition(n);
    t.require(bk::residual(c.to_matrix(), bk::twist(n)) == 0.0, "decomposition differs");
    t.require(c.count(bk::GateKind::SWAP) == n * (n - 1) / 2, "swap count");
    t.require(c.size() == c.count(bk::GateKind::SWAP), "non-swap gate");
  }
  const bk::CMatrix id2 = bk::CMatrix::identity(2);
  const bk::CMatrix want = bk::tensor(bk::tensor(id2, bk::swap_gate(2)), id2);
  t.require(bk::residual(bk::twist(2), want) == 0.0, "four-wire twist is not 1 (x) SWAP (x) 1");
  return t;
}

Tally criterion4() {
  Tally t;
  std::mt19937_64 rng(4);
  for (int d = 2; d <= 5; ++d) {
    std::vector<bk::ObservableSpec> all;
    for (int k = 1; k < d; ++k) {
      for (auto& s : bk::qudit_observables(d, k)) all.push_back(std::move(s));
    }
    t.add(bk::observable_check(all, kTol));
    for (int trial = 0; trial < 10; ++trial) {
      const bk::CMatrix m = bk::haar_unitary(static_cast<std::size_t>(d), rng);
      for (bk::Side side : {bk::Side::Left, bk::Side::Right}) {
        std::vector<bk::ObservableSpec> conj;
        for (const auto& s : all) conj.push_back(bk::conjugated_observable(s, m, side));
        t.add(bk::observable_check(conj, kTol));
      }
    }
    if (d == 2) {
      for (const auto& s : all) {
        if (s.name == "OX-(1)" || s.name == "OZ-(1)") {
          t.below(bk::residual(s.matrix, bk::CMatrix(4, 4)), kTol, s.name + " is not zero");
        }
      }
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    t.add(bk::observable_check(bk::multiqubit_observables(n), kTol));
    t.add(bk::multiqubit_labeling_check(n, kTol));
  }
  return t;
}

Tally criterion5() {
  Tally t;
  for (std::size_t n = 1; n <= 3; ++n) t.add(bk::trace_constraint_solve(n, kTol));
  return t;
}

Tally criterion6() {
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n) {
    const bk::Report r = bk::concurrence_check(n, n == 2 ? 100 : 10, 6, 1e-10);
    t.add(r);
  }
  return t;
}

Tally criterion7() {
  Tally t;
  using V = bk::TeleportVariant;
  std::mt19937_64 rng(7);
  auto all_labels = [&](V v, int d, const bk::CMatrix& m) {
    const auto ud = static_cast<std::size_t>(d);
    bk::TeleportEqCase c = bk::TeleportEqCase::make(v, d, m, 0, bk::random_state(ud, rng));
    for (std::size_t b = 0; b < c.basis.ops.size(); ++b) {
      c.b = b;
      t.add(bk::teleport_eq_check(c, kTol));
    }
  };
  for (int d : {2, 3, 5}) {
    const auto ud = static_cast<std::size_t>(d);
    all_labels(V::Qudit11, d, bk::haar_unitary(ud, rng));
    all_labels(V::Qudit11, d, bk::random_gaussian(ud, ud, rng));
    all_labels(V::Qudit22, d, bk::haar_unitary(ud, rng));
  }
  all_labels(V::Qudit11p, 3, bk::haar_unitary(3, rng));
  all_labels(V::Qudit11p, 3, bk::random_gaussian(3, 3, rng));
  all_labels(V::Qudit22p, 3, bk::haar_unitary(3, rng));
  all_labels(V::NQubit11, 4, bk::haar_unitary(4, rng));
  all_labels(V::NQubit22, 4, bk::haar_unitary(4, rng));
  all_labels(V::Basic2, 2, bk::CMatrix::identity(2));

  for (auto [v, d] : {std::pair{V::ProjectiveQudit, 2}, std::pair{V::ProjectiveQudit, 3},
                      std::pair{V::ProjectiveQudit, 5}, std::pair{V::ProjectiveNQubit, 4}}) {
    const auto ud = static_cast<std::size_t>(d);
    for (auto form : {bk::ProjectiveForm::Form11, bk::ProjectiveForm::Form22}) {
      bk::TeleportEqCase c =
          bk::TeleportEqCase::make(v, d, bk::haar_unitary(ud, rng), 0, bk::random_state(ud, rng));
      c.form = form;
      t.add(bk::projective_eq_check(c, kTol));
    }
  }

  using P = bk::ProtocolVariant;
  for (auto [v, d] : {std::pair{P::Basic2, 2}, std::pair{P::Qudit11, 3}, std::pair{P::Qudit22, 3},
                      std::pair{P::NQubit11, 4}, std::pair{P::NQubit22, 4}}) {
    t.add(bk::protocol_check(v, d, 10000, 70 + static_cast<std::uint64_t>(d), 1e-10));
  }
  return t;
}

Tally criterion8() {
  Tally t;
  for (const auto& p : bk::all_sign_pairs()) {
    t.add(bk::yang_baxter_check(bk::bell_transform(p), 2, kTol));
    for (std::size_t n : {3u, 4u}) t.add(bk::braid_rep_check(n, p, kTol));
  }
  const bk::Report cnot = bk::yang_baxter_check(bk::cnot_gate(), 2, kTol);
  t.require(cnot.max_residual() >= 0.5, "CNOT residual below 0.5");
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      const auto e = bk::BitString::from_index(x, 2), h = bk::BitString::from_index(y, 2);
      t.add(bk::yang_baxter_check(bk::twisted_yb_gate(e, h, bk::TwistKind::Conjugated), 4, kTol));
      const bk::Report plain =
          bk::yang_baxter_check(bk::twisted_yb_gate(e, h, bk::TwistKind::Plain), 4, kTol);
      t.require(plain.max_residual() > 1e-6, "plain twisted gate satisfies YBE");
    }
  }
  return t;
}

Tally criterion9() {
  Tally t;
  std::mt19937_64 rng(9);
  for (int d : {2, 3}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) t.add(bk::tl_relation_check(bk::tl_generators(n, d, a, b), kTol));
      }
      for (int trial = 0; trial < 10; ++trial) {
        const bk::CMatrix m = bk::haar_unitary(static_cast<std::size_t>(d), rng);
        const int a = trial % d, b = (trial / d) % d;
        for (bk::Side side : {bk::Side::Left, bk::Side::Right}) {
          t.add(bk::tl_relation_check(bk::tl_generators(n, d, a, b, m, side), kTol));
        }
      }
    }
  }
  std::vector<bk::cplx> diag = {1.0, 2.0};
  const bk::Report control =
      bk::tl_relation_check(bk::tl_generators(4, 2, 0, 0, bk::CMatrix::diagonal(diag)), kTol);
  const bk::Case* rel = control.find("relation");
  t.require(rel != nullptr && rel->residual > 1e-6, "non-unitary control satisfies the relation");
  return t;
}

Tally criterion10() {
  Tally t;
  t.add(bk::correction_table_check(kTol));
  int rows = 0;
  for (const auto& l : bk::all_sign_pairs()) {
    for (int bits = 0; bits < 16; ++bits) {
      const int i = bits >> 3 & 1, j = bits >> 2 & 1, k = bits >> 1 & 1, m = bits & 1;
      t.require(bk::correction_table_exponents(l, i, j, k, m) ==
                    bk::correction_exponents(l, l.inverse(), i, j, k, m),
                "table row disagrees");
      ++rows;
    }
  }
  t.require(rows == 64, "table not exhaustive");
  std::mt19937_64 rng(10);
  for (const auto& l : bk::all_sign_pairs()) {
    for (const auto& r : bk::all_sign_pairs()) {
      for (int km = 0; km < 4; ++km) {
        t.add(bk::braid_teleport_single_check(l, r, km >> 1, km & 1, bk::random_state(2, rng),
                                              kTol));
      }
    }
  }
  t.add(bk::braid_worked_examples_check(10, kTol));
  const bk::BitString el("00"), hl("11"), er("11"), hr("00");
  const bk::CMatrix psi = bk::random_state(4, rng);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const auto ab = bk::BitString::from_index(a, 2), bb = bk::BitString::from_index(b, 2);
      for (auto kind : {bk::TwistKind::Plain, bk::TwistKind::Conjugated}) {
        t.add(bk::braid_teleport_multi_check(el, hl, er, hr, ab, bb, kind, psi, kTol));
      }
    }
  }
  return t;
}

Tally criterion11() {
  Tally t;
  for (const auto& name : bk::suite_names()) {
    bk::SuiteOptions o;
    o.seed = 11;
    o.trials = 3;
    o.samples = 20;
    const std::string a = bk::to_json(bk::run_suite(name, o));
    const std::string b = bk::to_json(bk::run_suite(name, o));
    t.require(a == b, name + " differs between runs");
  }
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
      {"Bell-basis Gram and completeness", criterion1},
      {"basis theorem with unitary and perturbed extensions", criterion2},
      {"twist decomposition", criterion3},
      {"observable eigenequations", criterion4},
      {"trace-constraint system", criterion5},
      {"concurrence", criterion6},
      {"teleportation equations and protocol", criterion7},
      {"Yang-Baxter and braid relations", criterion8},
      {"Temperley-Lieb relations", criterion9},
      {"braid teleportation", criterion10},
      {"determinism", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.ok = false;
      t.note = std::string("exception: ") + e.what();
    }
    if (!t.ok) ++failures;
    std::printf("criterion %zu: %s  %s (max residual %.3g)%s%s\n", i + 1, t.ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), t.worst, t.note.empty() ? "" : "; ",
                t.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
