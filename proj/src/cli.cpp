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


#include "bellkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellkit/bell.hpp"
#include "bellkit/braid.hpp"
#include "bellkit/circuit.hpp"
#include "bellkit/teleport.hpp"
#include "bellkit/verify.hpp"

namespace bellkit {

namespace {

using json = nlohmann::ordered_json;

std::size_t n_or(const SuiteOptions& o, std::size_t fallback) { return o.n.value_or(fallback); }
int d_or(const SuiteOptions& o, int fallback) { return o.d.value_or(fallback); }

BasisFamily family_of(const SuiteOptions& o, Report& r) {
  r.params["family"] = o.family;
  if (o.family == "qubit") return BasisFamily::qubit_bell();
  if (o.family == "qudit") {
    r.params["d"] = std::to_string(d_or(o, 3));
    return BasisFamily::qudit_bell(d_or(o, 3));
  }
  if (o.family == "multi") {
    r.params["n"] = std::to_string(n_or(o, 2));
    return BasisFamily::multi_bell(n_or(o, 2));
  }
  throw DomainError("unknown family '" + o.family + "' (qubit, qudit, multi)");
}

// Collapses many sub-reports into one case per id, keeping the worst residual.
class MaxFold {
 public:
  void add(const Report& sub, const std::string& prefix) {
    for (const auto& c : sub.cases) {
      if (c.expect != Expect::Below) throw DomainError("MaxFold only takes identity cases");
      auto [it, fresh] = worst_.try_emplace(prefix + c.id, c.residual, c.threshold);
      if (!fresh) it->second.first = std::max(it->second.first, c.residual);
      if (fresh) order_.push_back(prefix + c.id);
    }
  }
  void into(Report& r) const {
    for (const auto& id : order_) {
      const auto& [res, thr] = worst_.at(id);
      r.check_below(id, res, thr);
    }
  }

 private:
  std::map<std::string, std::pair<double, double>> worst_;
  std::vector<std::string> order_;
};

std::string sign_label(BellTransformParams p) {
  return "B(" + std::to_string(p.epsilon) + "," + std::to_string(p.eta) + ")";
}

Report suite_gram(const SuiteOptions& o) {
  Report r("gram", o.tol);
  r.merge(gram_check(family_of(o, r), o.tol));
  return r;
}

Report suite_completeness(const SuiteOptions& o) {
  Report r("completeness", o.tol);
  r.merge(completeness_check(family_of(o, r), o.tol));
  return r;
}

Report suite_basis_theorem(const SuiteOptions& o) {
  Report r("basis-theorem", o.tol);
  r.seed = o.seed;
  r.params["trials"] = std::to_string(o.trials);
  if (o.family == "qudit") {
    r.params["family"] = "qudit";
    r.params["d"] = std::to_string(d_or(o, 3));
    r.merge(basis_theorem_suite(d_or(o, 3), o.trials, o.seed, o.tol));
  } else {
    r.merge(basis_theorem_suite(family_of(o, r), o.trials, o.seed, o.tol));
  }
  return r;
}

Report suite_observables(const SuiteOptions& o) {
  Report r("observables", o.tol);
  r.params["family"] = o.family;
  if (o.family == "multi") {
    const std::size_t n = n_or(o, 2);
    r.params["n"] = std::to_string(n);
    r.merge(observable_check(multiqubit_observables(n), o.tol));
    r.merge(multiqubit_labeling_check(n, o.tol), "labeling/");
    return r;
  }
  if (o.family != "qudit") throw DomainError("observables takes --family qudit or multi");
  const int d = d_or(o, 3);
  r.seed = o.seed;
  r.params["d"] = std::to_string(d);
  r.params["trials"] = std::to_string(o.trials);
  std::vector<int> ks;
  if (o.k == 0) {
    for (int k = 1; k < d; ++k) ks.push_back(k);
  } else {
    ks.push_back(o.k);
  }
  std::mt19937_64 rng(o.seed);
  std::vector<CMatrix> ms;
  for (std::size_t t = 0; t < o.trials; ++t) ms.push_back(haar_unitary(static_cast<std::size_t>(d), rng));
  for (int k : ks) {
    const auto specs = qudit_observables(d, k);
    const std::string pre = "k" + std::to_string(k) + "/";
    r.merge(observable_check(specs, o.tol), pre);
    MaxFold fold;
    for (const auto& m : ms) {
      for (Side side : {Side::Left, Side::Right}) {
        std::vector<ObservableSpec> conj;
        for (const auto& s : specs) conj.push_back(conjugated_observable(s, m, side));
        fold.add(observable_check(conj, o.tol),
                 pre + (side == Side::Left ? "left-M/" : "right-M/"));
      }
    }
    fold.into(r);
  }
  return r;
}

Report suite_twist(const SuiteOptions& o) {
  Report r("twist", o.tol);
  r.params["n"] = std::to_string(n_or(o, 3));
  r.merge(twist_check(n_or(o, 3), o.tol));
  return r;
}

Report suite_concurrence(const SuiteOptions& o) {
  Report r = concurrence_check(n_or(o, 2), o.samples, o.seed, o.tol);
  return r;
}

TeleportVariant variant_or(const SuiteOptions& o, TeleportVariant fallback) {
  return o.variant.empty() ? fallback : variant_from_name(o.variant);
}

bool is_nqubit_variant(TeleportVariant v) {
  return v == TeleportVariant::NQubit11 || v == TeleportVariant::NQubit22 ||
         v == TeleportVariant::ProjectiveNQubit;
}

// Local dimension of psi: 2^n for n-qubit variants, d otherwise.
int local_dim(const SuiteOptions& o, TeleportVariant v, Report& r) {
  if (v == TeleportVariant::Basic2) return 2;
  if (is_nqubit_variant(v)) {
    const std::size_t n = n_or(o, 2);
    if (n < 1 || n > 3) throw DomainError("n-qubit teleportation takes n in [1, 3]");
    r.params["n"] = std::to_string(n);
    return 1 << n;
  }
  r.params["d"] = std::to_string(d_or(o, 3));
  return d_or(o, 3);
}

CMatrix resource_matrix(const SuiteOptions& o, std::size_t d, std::mt19937_64& rng) {
  if (o.m == "unitary") return haar_unitary(d, rng);
  if (o.m == "identity") return CMatrix::identity(d);
  if (o.m == "general") return random_gaussian(d, d, rng);
  throw DomainError("unknown --m '" + o.m + "' (unitary, general, identity)");
}

Report suite_teleport_eq(const SuiteOptions& o, TeleportVariant fallback, const char* id) {
  const TeleportVariant v = variant_or(o, fallback);
  Report r(id, o.tol);
  r.seed = o.seed;
  r.params["variant"] = variant_name(v);
  r.params["m"] = o.m;
  const int d = local_dim(o, v, r);
  const auto ud = static_cast<std::size_t>(d);
  std::mt19937_64 rng(o.seed);
  const CMatrix m = resource_matrix(o, ud, rng);
  const CMatrix psi = random_state(ud, rng);
  TeleportEqCase c = TeleportEqCase::make(v, d, m, 0, psi);
  const bool projective =
      v == TeleportVariant::ProjectiveQudit || v == TeleportVariant::ProjectiveNQubit;
  if (projective) {
    if (o.form != "11" && o.form != "22") throw DomainError("--form takes 11 or 22");
    c.form = o.form == "11" ? ProjectiveForm::Form11 : ProjectiveForm::Form22;
    r.params["form"] = o.form;
    r.merge(projective_eq_check(c, o.tol));
    return r;
  }
  const std::size_t labels = v == TeleportVariant::Basic2 ? 1 : c.basis.ops.size();
  for (std::size_t b = 0; b < labels; ++b) {
    c.b = b;
    r.merge(teleport_eq_check(c, o.tol), c.basis.labels[b].str() + "/");
  }
  r.merge(linearity_reduction_check(v, d, o.seed, o.tol), "linearity/");
  return r;
}

Report suite_ybe(const SuiteOptions& o) {
  Report r("ybe", o.tol);
  r.params["gate"] = o.gate;
  if (o.gate == "bell") {
    r.seed = o.seed;
    std::mt19937_64 rng(o.seed);
    for (const auto& p : all_sign_pairs()) {
      const CMatrix b = bell_transform(p);
      r.merge(yang_baxter_check(b, 2, o.tol), sign_label(p) + "/");
      const CMatrix v = haar_unitary(2, rng);
      const CMatrix vv = tensor(v, v);
      r.merge(yang_baxter_check(vv * b * dagger(vv), 2, o.tol), sign_label(p) + "/local-basis-");
    }
  } else if (o.gate == "swap") {
    const std::size_t d = static_cast<std::size_t>(d_or(o, 2));
    r.params["d"] = std::to_string(d);
    r.merge(yang_baxter_check(swap_gate(d), d, o.tol));
  } else if (o.gate == "cnot") {
    r.merge(yang_baxter_check(cnot_gate(), 2, o.tol));
  } else if (o.gate == "twisted-plain" || o.gate == "twisted-conjugated") {
    const std::size_t n = n_or(o, 2);
    const BitString eps = o.eps.empty() ? BitString::ones(n) : BitString(o.eps);
    const BitString eta = o.eta.empty() ? BitString::ones(n) : BitString(o.eta);
    r.params["n"] = std::to_string(n);
    r.params["eps"] = eps.str();
    r.params["eta"] = eta.str();
    const auto kind = o.gate == "twisted-plain" ? TwistKind::Plain : TwistKind::Conjugated;
    r.merge(yang_baxter_check(twisted_yb_gate(eps, eta, kind), std::size_t{1} << eps.size(),
                              o.tol));
  } else {
    throw DomainError("unknown --gate '" + o.gate +
                      "' (bell, swap, cnot, twisted-plain, twisted-conjugated)");
  }
  return r;
}

Report suite_braid(const SuiteOptions& o) {
  Report r("braid", o.tol);
  const std::size_t n = n_or(o, 4);
  r.params["gate"] = o.gate;
  r.params["n"] = std::to_string(n);
  if (o.gate == "bell") {
    for (const auto& p : all_sign_pairs()) {
      r.merge(bell_action_check(p, o.tol), sign_label(p) + "/");
      r.merge(braid_rep_check(n, p, o.tol), sign_label(p) + "/");
    }
  } else if (o.gate == "cnot") {
    r.merge(braid_rep_check(n, cnot_gate(), o.tol));
  } else {
    throw DomainError("braid takes --gate bell or cnot");
  }
  return r;
}

Report suite_tl(const SuiteOptions& o) {
  Report r("tl", o.tol);
  r.seed = o.seed;
  const std::size_t n = n_or(o, 4);
  const int d = d_or(o, 2);
  r.params["n"] = std::to_string(n);
  r.params["d"] = std::to_string(d);
  r.params["trials"] = std::to_string(o.trials);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      r.merge(tl_relation_check(tl_generators(n, d, a, b), o.tol),
              "a(" + std::to_string(a) + "," + std::to_string(b) + ")/");
    }
  }
  std::mt19937_64 rng(o.seed);
  const auto ud = static_cast<std::size_t>(d);
  MaxFold fold;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const CMatrix m = haar_unitary(ud, rng);
    const int a = static_cast<int>(rng() % ud);
    const int b = static_cast<int>(rng() % ud);
    fold.add(tl_relation_check(tl_generators(n, d, a, b, m, Side::Left), o.tol), "left-M/");
    fold.add(tl_relation_check(tl_generators(n, d, a, b, m, Side::Right), o.tol), "right-M/");
  }
  fold.into(r);
  std::vector<cplx> diag;
  for (int i = 0; i < d; ++i) diag.push_back(static_cast<double>(i + 1));
  const Report control = tl_relation_check(tl_generators(n, d, 0, 0, CMatrix::diagonal(diag)), o.tol);
  r.check_above("nonunitary-control", control.max_residual(), 1e-6);
  return r;
}

Report suite_braid_teleport(const SuiteOptions& o) {
  Report r("braid-teleport", o.tol);
  r.seed = o.seed;
  const std::size_t n = n_or(o, 2);
  if (n < 1 || n > 3) throw DomainError("braid-teleport takes n in [1, 3]");
  r.params["n"] = std::to_string(n);
  r.params["trials"] = std::to_string(o.trials);
  r.merge(correction_table_check(o.tol), "table/");
  std::mt19937_64 rng(o.seed);
  MaxFold single;
  for (const auto& left : all_sign_pairs()) {
    for (const auto& right : all_sign_pairs()) {
      for (int km = 0; km < 4; ++km) {
        single.add(braid_teleport_single_check(left, right, km >> 1, km & 1,
                                               random_state(2, rng), o.tol),
                   "single/");
      }
    }
  }
  single.into(r);
  r.merge(braid_worked_examples_check(rng(), o.tol), "worked/");

  // Random per-pair signs on both sides, every resource label, both gate kinds.
  const std::size_t labels = std::size_t{1} << n;
  MaxFold multi;
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto bits = [&] { return BitString::from_index(rng() % labels, n); };
    const BitString el = bits(), hl = bits(), er = bits(), hr = bits();
    const CMatrix psi = random_state(labels, rng);
    for (std::size_t a = 0; a < labels; ++a) {
      for (std::size_t b = 0; b < labels; ++b) {
        const BitString ab = BitString::from_index(a, n), bb = BitString::from_index(b, n);
        multi.add(braid_teleport_multi_check(el, hl, er, hr, ab, bb, TwistKind::Plain, psi, o.tol),
                  "multi/plain/");
        multi.add(
            braid_teleport_multi_check(el, hl, er, hr, ab, bb, TwistKind::Conjugated, psi, o.tol),
            "multi/conjugated/");
      }
    }
  }
  multi.into(r);
  return r;
}

Report suite_trace_constraint(const SuiteOptions& o) {
  Report r("trace-constraint", o.tol);
  r.params["n"] = std::to_string(n_or(o, 2));
  r.merge(trace_constraint_solve(n_or(o, 2), o.tol));
  return r;
}

using SuiteFn = std::function<Report(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"gram", suite_gram},
      {"completeness", suite_completeness},
      {"basis-theorem", suite_basis_theorem},
      {"observables", suite_observables},
      {"twist", suite_twist},
      {"concurrence", suite_concurrence},
      {"teleport-eq",
       [](const SuiteOptions& o) {
         return suite_teleport_eq(o, TeleportVariant::Qudit22, "teleport-eq");
       }},
      {"projective-eq",
       [](const SuiteOptions& o) {
         return suite_teleport_eq(o, TeleportVariant::ProjectiveQudit, "projective-eq");
       }},
      {"ybe", suite_ybe},
      {"braid", suite_braid},
      {"tl", suite_tl},
      {"braid-teleport", suite_braid_teleport},
      {"trace-constraint", suite_trace_constraint},
  };
  return r;
}

void write_output(const std::string& body, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + path);
  f << body;
}

struct Common {
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  std::string json_path;
  bool timing = false;
  bool text = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--tol", c.tol, "Absolute tolerance (floor 1e-15)");
  sub->add_option("--seed", c.seed, "RNG seed (default: BELLKIT_SEED or 1)");
  sub->add_option("--json", c.json_path, "Write the JSON report here instead of stdout");
  sub->add_flag("--timing", c.timing, "Include wall_ms in the JSON report");
  sub->add_flag("--text", c.text, "Print a text summary instead of JSON on stdout");
}

void check_tol(double tol) {
  if (!(tol >= kToleranceFloor)) {
    throw DomainError("--tol must be at least 1e-15");
  }
}

int emit(Report& r, const Common& c, std::ostream& out, const json* extra = nullptr) {
  std::string body = to_json(r, c.timing);
  if (extra != nullptr) {
    json j = json::parse(body);
    for (const auto& [k, v] : extra->items()) j[k] = v;
    body = j.dump(2) + "\n";
  }
  if (!c.json_path.empty()) {
    write_output(body, c.json_path, out);
    out << to_text(r);
  } else {
    out << (c.text ? to_text(r) : body);
  }
  return r.pass() ? 0 : 1;
}

template <class F>
Report timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r = f();
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

int cmd_teleport(const std::string& variant, std::optional<int> d, std::optional<std::size_t> n,
                 std::size_t samples, const Common& c, std::ostream& out) {
  const ProtocolVariant v = protocol_from_name(variant);
  int dim = d.value_or(2);
  if (v == ProtocolVariant::Basic2) dim = 2;
  if (v == ProtocolVariant::NQubit11 || v == ProtocolVariant::NQubit22) {
    const std::size_t nn = n.value_or(2);
    if (nn < 1 || nn > 3) throw DomainError("--n must be in [1, 3]");
    dim = 1 << nn;
  }
  if (dim < 2 || dim > 16) throw DomainError("--d must be in [2, 16]");
  Report r = timed([&] { return protocol_check(v, dim, samples, c.seed, c.tol); });

  // Same draws as protocol_check, so the histogram below is the one it tested.
  const auto ud = static_cast<std::size_t>(dim);
  std::mt19937_64 rng(c.seed);
  const CMatrix psi = random_state(ud, rng);
  const CMatrix m = v == ProtocolVariant::Basic2 ? CMatrix::identity(2) : haar_unitary(ud, rng);
  const ProtocolBatch batch = run_protocol_batch(psi, v, m, samples, rng());
  const auto table = outcome_table(psi, v, m);
  json outcomes = json::array();
  for (std::size_t a = 0; a < table.size(); ++a) {
    outcomes.push_back({{"label", table[a].label},
                        {"probability", table[a].probability},
                        {"correction", table[a].correction},
                        {"fidelity", table[a].fidelity},
                        {"count", batch.histogram[a]}});
  }
  json extra;
  extra["transcript"] = {{"samples", batch.samples},
                         {"min_fidelity", batch.min_fidelity},
                         {"max_sigma", batch.max_sigma},
                         {"outcomes", outcomes}};
  return emit(r, c, out, &extra);
}

// Comment line placed after the header so the file still opens with OPENQASM.
std::string with_comment(std::string qasm, const std::string& note) {
  const auto at = qasm.find("qreg");
  qasm.insert(at == std::string::npos ? qasm.size() : at, "// " + note + "\n");
  return qasm;
}

int cmd_circuit(std::size_t n, const std::string& alpha, const std::string& beta,
                std::optional<std::size_t> twist_n, const std::string& path, std::ostream& out) {
  std::string body;
  if (twist_n) {
    const Circuit circ = twist_decomposition(*twist_n);
    body = with_comment(circ.to_qasm(), "twist on " + std::to_string(2 * *twist_n) +
                                             " wires, interleaved to blocked");
  } else {
    const BitString a = alpha.empty() ? BitString::zeros(n) : BitString(alpha);
    const BitString b = beta.empty() ? BitString::zeros(n) : BitString(beta);
    if (a.size() != n || b.size() != n) {
      throw DomainError("--alpha and --beta must have length n = " + std::to_string(n));
    }
    const Circuit circ = prep_circuit(a, b);
    body = with_comment(circ.to_qasm(), "Bell state alpha=" + a.str() + " beta=" + b.str() +
                                             "; q[0..n-1] = A1..An, q[n..2n-1] = B1..Bn");
  }
  write_output(body, path, out);
  return 0;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

Report run_suite(std::string_view name, const SuiteOptions& opt) {
  check_tol(opt.tol);
  for (const auto& [id, fn] : registry()) {
    if (id == name) return fn(opt);
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("BELLKIT_SEED");
  if (env == nullptr || *env == '\0') return 1;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 20) {
    throw DomainError("BELLKIT_SEED must be an unsigned integer, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw DomainError("BELLKIT_SEED out of range");
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"bellkit: numerical checks for Bell bases, teleportation and braiding"};
  app.require_subcommand(1);

  Common common;
  SuiteOptions so;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_help = "Suite:";
  for (const auto& s : suite_names()) suite_help += " " + s;
  verify->add_option("suite", suite, suite_help)->required();
  verify->add_option("--family", so.family, "qubit, qudit or multi");
  verify->add_option("--d", so.d, "Local dimension");
  verify->add_option("--n", so.n, "Pair count or strand count");
  verify->add_option("--k", so.k, "Observable power (0 = all)");
  verify->add_option("--trials", so.trials, "Random trials");
  verify->add_option("--samples", so.samples, "Random samples");
  verify->add_option("--gate", so.gate, "bell, swap, cnot, twisted-plain, twisted-conjugated");
  verify->add_option("--variant", so.variant, "Teleportation variant");
  verify->add_option("--form", so.form, "Projective form: 11 or 22");
  verify->add_option("--m", so.m, "Resource matrix: unitary, general or identity");
  verify->add_option("--eps", so.eps, "Per-pair epsilon signs as bits (1 = +1)");
  verify->add_option("--eta", so.eta, "Per-pair eta signs as bits (1 = +1)");
  add_common(verify, common);

  std::string variant = "basic2";
  std::optional<int> td;
  std::optional<std::size_t> tn;
  std::size_t samples = 1000;
  auto* tele = app.add_subcommand("teleport", "Simulate a teleportation protocol");
  tele->add_option("--variant", variant, "basic2, qudit11, qudit22, nqubit11, nqubit22");
  tele->add_option("--d", td, "Qudit dimension");
  tele->add_option("--n", tn, "Qubit pairs for n-qubit variants");
  tele->add_option("--samples", samples, "Protocol runs");
  add_common(tele, common);

  std::size_t cn = 1;
  std::string alpha, beta, qasm_out;
  std::optional<std::size_t> twist_n;
  auto* circ = app.add_subcommand("circuit", "Export an OpenQASM 2.0 circuit");
  circ->add_option("--n", cn, "Qubit pairs");
  circ->add_option("--alpha", alpha, "Phase label bits");
  circ->add_option("--beta", beta, "Flip label bits");
  circ->add_option("--twist", twist_n, "Export the twist on 2n wires instead");
  circ->add_option("--out", qasm_out, "Output path (default stdout)");

  bool seed_given = false;
  try {
    app.parse(argc, argv);
    seed_given = verify->count("--seed") + tele->count("--seed") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!seed_given) common.seed = default_seed();
    check_tol(common.tol);
    if (*verify) {
      so.tol = common.tol;
      so.seed = common.seed;
      Report r = timed([&] { return run_suite(suite, so); });
      return emit(r, common, out);
    }
    if (*tele) return cmd_teleport(variant, td, tn, samples, common, out);
    if (*circ) return cmd_circuit(cn, alpha, beta, twist_n, qasm_out, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bellkit
