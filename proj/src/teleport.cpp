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

#include "bellkit/teleport.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "bellkit/pauli.hpp"

namespace bellkit {

namespace {

struct VariantInfo {
  TeleportVariant v;
  const char* name;
};

constexpr VariantInfo kVariants[] = {
    {TeleportVariant::Qudit11, "qudit11"},
    {TeleportVariant::Qudit22, "qudit22"},
    {TeleportVariant::Qudit11p, "qudit11p"},
    {TeleportVariant::Qudit22p, "qudit22p"},
    {TeleportVariant::NQubit11, "nqubit11"},
    {TeleportVariant::NQubit22, "nqubit22"},
    {TeleportVariant::ProjectiveQudit, "projective_qudit"},
    {TeleportVariant::ProjectiveNQubit, "projective_nqubit"},
    {TeleportVariant::Basic2, "basic2"},
};

bool is_nqubit(TeleportVariant v) {
  return v == TeleportVariant::NQubit11 || v == TeleportVariant::NQubit22 ||
         v == TeleportVariant::ProjectiveNQubit;
}

bool is_projective(TeleportVariant v) {
  return v == TeleportVariant::ProjectiveQudit || v == TeleportVariant::ProjectiveNQubit;
}

bool is_form22(TeleportVariant v) {
  return v == TeleportVariant::Qudit22 || v == TeleportVariant::Qudit22p ||
         v == TeleportVariant::NQubit22;
}

std::size_t qubits_for(int d) {
  if (d < 2 || !std::has_single_bit(static_cast<unsigned>(d))) {
    throw DomainError("n-qubit variants need d = 2^n, got " + std::to_string(d));
  }
  return static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(d)));
}

void require_unit(const CMatrix& psi, int d) {
  if (!psi.is_column() || psi.rows() != static_cast<std::size_t>(d)) {
    throw ShapeError("psi must be a " + std::to_string(d) + "-dim column");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw DomainError("psi is not normalized");
}

void validate(const TeleportEqCase& c) {
  const auto d = static_cast<std::size_t>(c.d);
  require_unit(c.psi, c.d);
  if (!c.m.is_square() || c.m.rows() != d) throw ShapeError("M must be d x d");
  if (c.basis.d != c.d || c.basis.ops.size() != d * d) {
    throw ShapeError("measurement basis must hold d^2 operators of size d");
  }
  if (c.b >= c.basis.ops.size()) {
    throw DomainError("resource label index " + std::to_string(c.b) + " out of range");
  }
  const bool needs_unitary =
      is_form22(c.variant) || (is_projective(c.variant) && c.form == ProjectiveForm::Form22);
  if (needs_unitary && !is_unitary(c.m, 1e-10)) {
    throw DomainError(variant_name(c.variant) + " requires a unitary M");
  }
}

UnitaryBasis default_basis(TeleportVariant v, int d) {
  if (v == TeleportVariant::Basic2) return qubit_pauli_basis();
  if (is_nqubit(v)) return pauli_word_basis(qubits_for(d));
  return gen_pauli_basis(d);
}

// The receiver operator for outcome a. `shift` picks a wrong label to build
// a corrupted right-hand side.
CMatrix receiver_op(const TeleportEqCase& c, std::size_t a, std::size_t shift) {
  const std::size_t count = c.basis.ops.size();
  const CMatrix& ua = c.basis.ops[(a + shift) % count];
  const CMatrix& ub = c.basis.ops[c.b];
  const CMatrix ubt = is_nqubit(c.variant) ? dagger(ub) : transpose(ub);
  if (is_form22(c.variant)) return ubt * dagger(ua);
  return c.m * ubt * dagger(ua);
}

std::pair<CMatrix, CMatrix> sides(const TeleportEqCase& c, std::size_t shift) {
  validate(c);
  if (is_projective(c.variant)) {
    throw DomainError("projective variants are checked by projective_eq_check");
  }
  const CMatrix& ub = c.basis.ops[c.b];
  const bool f22 = is_form22(c.variant);
  const CMatrix resource = bell_from_op(f22 ? c.m * ub : ub * transpose(c.m));
  CMatrix lhs = tensor(c.psi, resource);
  const auto d = static_cast<std::size_t>(c.d);
  CMatrix rhs(d * d * d, 1);
  const CMatrix mt = transpose(c.m);
  for (std::size_t a = 0; a < c.basis.ops.size(); ++a) {
    const CMatrix& ua = c.basis.ops[a];
    const CMatrix meas = bell_from_op(f22 ? ua * mt : ua);
    rhs += tensor(meas, receiver_op(c, a, shift) * c.psi);
  }
  rhs *= 1.0 / static_cast<double>(c.d);
  return {std::move(lhs), std::move(rhs)};
}

std::string word_name(const BellLabel& l) {
  switch (l.kind) {
    case BellLabel::Kind::Qubit2:
      return to_string(PauliWord::from_labels(BitString::from_index(l.alpha, 1),
                                              BitString::from_index(l.beta, 1)));
    case BellLabel::Kind::Qudit2:
      return "Z^" + std::to_string(l.alpha) + "X^" + std::to_string(l.beta);
    case BellLabel::Kind::Multi2n:
      return to_string(PauliWord::from_labels(l.alpha_bits, l.beta_bits));
    case BellLabel::Kind::Custom:
      break;
  }
  return "U" + l.str();
}

// Correction words are built symbolically from the outcome label and only
// then turned into matrices.
CMatrix word_from_label(const BellLabel& l) {
  switch (l.kind) {
    case BellLabel::Kind::Qubit2:
      return word_matrix(PauliWord::from_labels(BitString::from_index(l.alpha, 1),
                                                BitString::from_index(l.beta, 1)));
    case BellLabel::Kind::Qudit2:
      return gen_word_matrix(GenPauliWord{l.d, l.alpha, l.beta, 0});
    case BellLabel::Kind::Multi2n:
      return word_matrix(PauliWord::from_labels(l.alpha_bits, l.beta_bits));
    case BellLabel::Kind::Custom:
      break;
  }
  throw DomainError("no symbolic word for label " + l.str());
}

struct ProtocolSetup {
  int d = 2;
  CMatrix resource;
  std::vector<CMatrix> meas;
  std::vector<std::string> labels;
  std::vector<CMatrix> corrections;
  std::vector<std::string> correction_names;
};

// `pair_state` plays the role of |Omega>; the skewed control swaps it out.
ProtocolSetup make_setup(ProtocolVariant v, int d, const CMatrix& m, const CMatrix& pair_state) {
  const auto ud = static_cast<std::size_t>(d);
  if (!m.is_square() || m.rows() != ud) throw ShapeError("M must be d x d");
  if (!is_unitary(m, 1e-10)) throw DomainError("protocol requires a unitary M");
  UnitaryBasis basis;
  switch (v) {
    case ProtocolVariant::Basic2:
      if (d != 2) throw DomainError("basic2 teleports a single qubit");
      basis = qubit_pauli_basis();
      break;
    case ProtocolVariant::Qudit11:
    case ProtocolVariant::Qudit22:
      basis = gen_pauli_basis(d);
      break;
    case ProtocolVariant::NQubit11:
    case ProtocolVariant::NQubit22:
      basis = pauli_word_basis(qubits_for(d));
      break;
  }
  ProtocolSetup s;
  s.d = d;
  const bool f22 = v == ProtocolVariant::Qudit22 || v == ProtocolVariant::NQubit22;
  const CMatrix basic_m = v == ProtocolVariant::Basic2 ? CMatrix::identity(2) : m;
  // 11: (1 (x) M)|pair>, measure |Omega(a)>, correct with U_a M^dag.
  // 22: (M (x) 1)|pair>, measure (U_a M^T (x) 1)|Omega>, correct with U_a.
  s.resource = f22 ? apply_left(basic_m, pair_state, ud) : apply_right(basic_m, pair_state, ud);
  const CMatrix mt = transpose(basic_m);
  const CMatrix md = dagger(basic_m);
  for (std::size_t a = 0; a < basis.ops.size(); ++a) {
    s.meas.push_back(bell_from_op(f22 ? basis.ops[a] * mt : basis.ops[a]));
    s.labels.push_back(basis.labels[a].str());
    const CMatrix word = word_from_label(basis.labels[a]);
    if (f22 || v == ProtocolVariant::Basic2) {
      s.corrections.push_back(word);
      s.correction_names.push_back(word_name(basis.labels[a]));
    } else {
      s.corrections.push_back(word * md);
      s.correction_names.push_back(word_name(basis.labels[a]) + "*M^dag");
    }
  }
  return s;
}

struct OutcomeData {
  OutcomeRow row;
  CMatrix output;
};

std::vector<OutcomeData> run_table(const CMatrix& psi, const ProtocolSetup& s) {
  require_unit(psi, s.d);
  const CMatrix full = tensor(psi, s.resource);
  std::vector<OutcomeData> out;
  for (std::size_t a = 0; a < s.meas.size(); ++a) {
    const CMatrix bob = contract_left(s.meas[a], full);
    const double p = std::pow(bob.norm(), 2);
    OutcomeData o;
    o.row.label = s.labels[a];
    o.row.probability = p;
    o.row.correction = s.correction_names[a];
    if (p > 0.0) {
      CMatrix normalized = bob;
      normalized *= 1.0 / std::sqrt(p);
      o.output = s.corrections[a] * normalized;
      o.row.fidelity = std::abs(inner(psi, o.output));
    } else {
      o.output = CMatrix(psi.rows(), 1);
      o.row.fidelity = 0.0;
    }
    out.push_back(std::move(o));
  }
  return out;
}

int dim_of(const CMatrix& psi) { return static_cast<int>(psi.rows()); }

}  // namespace

std::string variant_name(TeleportVariant v) {
  for (const auto& e : kVariants) {
    if (e.v == v) return e.name;
  }
  return "?";
}

TeleportVariant variant_from_name(std::string_view name) {
  for (const auto& e : kVariants) {
    if (name == e.name) return e.v;
  }
  throw DomainError("unknown teleportation variant: " + std::string(name));
}

TeleportEqCase TeleportEqCase::make(TeleportVariant v, int d, const CMatrix& m, std::size_t b,
                                    const CMatrix& psi) {
  TeleportEqCase c;
  c.variant = v;
  c.d = v == TeleportVariant::Basic2 ? 2 : d;
  c.basis = default_basis(v, c.d);
  c.m = v == TeleportVariant::Basic2 ? CMatrix::identity(2) : m;
  c.b = v == TeleportVariant::Basic2 ? 0 : b;
  c.psi = psi;
  return c;
}

Report transfer_identity_check(int d, std::size_t samples, std::uint64_t seed, double tol) {
  if (d < 2 || d > 16) throw DomainError("transfer_identity_check: d must be in [2, 16]");
  Report r("transfer-identity", tol);
  r.seed = seed;
  r.params["d"] = std::to_string(d);
  r.params["samples"] = std::to_string(samples);
  const auto ud = static_cast<std::size_t>(d);
  const CMatrix om = omega(d);
  std::mt19937_64 rng(seed);
  double worst = 0.0, worst_norm = 0.0;
  auto one = [&](const CMatrix& psi) {
    const CMatrix out = contract_left(om, tensor(psi, om));
    CMatrix expect = psi;
    expect *= 1.0 / d;
    worst = std::max(worst, residual(out, expect));
    worst_norm = std::max(worst_norm, std::abs(out.norm() - 1.0 / d));
  };
  for (std::size_t i = 0; i < ud; ++i) one(CMatrix::basis_ket(ud, i));
  for (std::size_t s = 0; s < samples; ++s) one(random_state(ud, rng));
  r.check("transfer", worst);
  r.check("norm-is-1/d", worst_norm);
  return r;
}

std::pair<CMatrix, CMatrix> teleport_eq_sides(const TeleportEqCase& c) { return sides(c, 0); }

Report teleport_eq_check(const TeleportEqCase& c, double tol) {
  if (is_projective(c.variant)) return projective_eq_check(c, tol);
  validate(c);
  Report r("teleport-eq", tol);
  r.params["variant"] = variant_name(c.variant);
  r.params["d"] = std::to_string(c.d);
  r.params["label"] = c.basis.labels.at(c.b).str();
  const auto [lhs, rhs] = sides(c, 0);
  r.check("equation", residual(lhs, rhs));
  if (is_nqubit(c.variant)) {
    double worst = 0.0;
    for (const auto& t : c.basis.ops) worst = std::max(worst, residual(transpose(t), dagger(t)));
    r.check("transpose-is-dagger", worst);
  }
  return r;
}

Report projective_eq_check(const TeleportEqCase& c, double tol) {
  validate(c);
  Report r("projective-eq", tol);
  r.params["variant"] = variant_name(c.variant);
  r.params["form"] = c.form == ProjectiveForm::Form11 ? "11" : "22";
  r.params["d"] = std::to_string(c.d);
  const auto d = static_cast<std::size_t>(c.d);
  const bool f22 = c.form == ProjectiveForm::Form22;
  const CMatrix mt = transpose(c.m);
  const CMatrix resource = f22 ? bell_from_op(c.m) : bell_from_op(mt);
  const CMatrix full = tensor(c.psi, resource);
  const CMatrix id = CMatrix::identity(d);
  const bool unitary = is_unitary(c.m, 1e-10);

  double worst = 0.0, prob_sum = 0.0, prob_dev = 0.0, fid_gap = 0.0;
  const double uniform = 1.0 / static_cast<double>(d * d);
  for (std::size_t a = 0; a < c.basis.ops.size(); ++a) {
    const CMatrix& ua = c.basis.ops[a];
    const CMatrix meas = bell_from_op(f22 ? ua * mt : ua);
    const CMatrix projected = tensor(outer(meas, meas), id) * full;
    const CMatrix held = f22 ? dagger(ua) * c.psi : c.m * dagger(ua) * c.psi;
    CMatrix expect = tensor(meas, held);
    expect *= 1.0 / c.d;
    const double res = residual(projected, expect);
    worst = std::max(worst, res);
    r.check("outcome/" + c.basis.labels[a].str(), res);

    const double p = std::pow(projected.norm(), 2);
    prob_sum += p;
    prob_dev = std::max(prob_dev, std::abs(p - uniform));
    if (unitary) {
      CMatrix bob = contract_left(meas, full);
      bob *= 1.0 / std::sqrt(p);
      const CMatrix correction = f22 ? ua : ua * dagger(c.m);
      fid_gap = std::max(fid_gap, 1.0 - std::abs(inner(c.psi, correction * bob)));
    }
  }
  r.params["max_outcome_residual"] = std::to_string(worst);
  if (unitary) {
    r.check("probability-sum", std::abs(prob_sum - 1.0));
    r.check("probability-uniform", prob_dev);
    r.check_below("corrected-fidelity-gap", fid_gap, 1e-10);
  }
  return r;
}

std::string protocol_name(ProtocolVariant v) {
  switch (v) {
    case ProtocolVariant::Basic2:
      return "basic2";
    case ProtocolVariant::Qudit11:
      return "qudit11";
    case ProtocolVariant::Qudit22:
      return "qudit22";
    case ProtocolVariant::NQubit11:
      return "nqubit11";
    case ProtocolVariant::NQubit22:
      return "nqubit22";
  }
  return "?";
}

ProtocolVariant protocol_from_name(std::string_view name) {
  for (auto v : {ProtocolVariant::Basic2, ProtocolVariant::Qudit11, ProtocolVariant::Qudit22,
                 ProtocolVariant::NQubit11, ProtocolVariant::NQubit22}) {
    if (name == protocol_name(v)) return v;
  }
  throw DomainError("unknown protocol variant: " + std::string(name));
}

std::vector<OutcomeRow> outcome_table(const CMatrix& psi, ProtocolVariant v, const CMatrix& m) {
  const int d = dim_of(psi);
  const auto data = run_table(psi, make_setup(v, d, m, omega(d)));
  std::vector<OutcomeRow> rows;
  for (const auto& o : data) rows.push_back(o.row);
  return rows;
}

ProtocolTranscript run_protocol(const CMatrix& psi, ProtocolVariant v, const CMatrix& m,
                                std::uint64_t seed) {
  const int d = dim_of(psi);
  const auto data = run_table(psi, make_setup(v, d, m, omega(d)));
  std::vector<double> probs;
  for (const auto& o : data) probs.push_back(o.row.probability);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(probs.begin(), probs.end());
  const std::size_t a = pick(rng);
  ProtocolTranscript t;
  t.variant = protocol_name(v);
  t.d = d;
  t.seed = seed;
  t.outcome = a;
  t.outcome_label = data[a].row.label;
  t.probability = data[a].row.probability;
  t.correction = data[a].row.correction;
  t.output = data[a].output;
  t.fidelity = data[a].row.fidelity;
  return t;
}

ProtocolBatch run_protocol_batch(const CMatrix& psi, ProtocolVariant v, const CMatrix& m,
                                 std::size_t samples, std::uint64_t seed) {
  const int d = dim_of(psi);
  const auto data = run_table(psi, make_setup(v, d, m, omega(d)));
  ProtocolBatch b;
  b.samples = samples;
  for (const auto& o : data) {
    b.labels.push_back(o.row.label);
    b.probabilities.push_back(o.row.probability);
  }
  b.histogram.assign(data.size(), 0);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(b.probabilities.begin(), b.probabilities.end());
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t a = pick(rng);
    ++b.histogram[a];
    b.min_fidelity = std::min(b.min_fidelity, data[a].row.fidelity);
  }
  const auto n = static_cast<double>(samples);
  for (std::size_t a = 0; a < data.size() && samples > 0; ++a) {
    const double p = b.probabilities[a];
    const double sigma = std::sqrt(n * p * (1.0 - p));
    if (sigma > 0.0) {
      b.max_sigma = std::max(b.max_sigma, std::abs(b.histogram[a] - n * p) / sigma);
    }
  }
  return b;
}

Report protocol_check(ProtocolVariant v, int d, std::size_t samples, std::uint64_t seed,
                      double tol) {
  Report r("protocol", tol);
  r.seed = seed;
  r.params["variant"] = protocol_name(v);
  r.params["d"] = std::to_string(d);
  r.params["samples"] = std::to_string(samples);
  const auto ud = static_cast<std::size_t>(d);
  std::mt19937_64 rng(seed);
  const CMatrix psi = random_state(ud, rng);
  const CMatrix m = v == ProtocolVariant::Basic2 ? CMatrix::identity(2) : haar_unitary(ud, rng);

  const auto table = run_table(psi, make_setup(v, d, m, omega(d)));
  double sum = 0.0, dev = 0.0, gap = 0.0;
  for (const auto& o : table) {
    sum += o.row.probability;
    dev = std::max(dev, std::abs(o.row.probability - 1.0 / static_cast<double>(ud * ud)));
    gap = std::max(gap, 1.0 - o.row.fidelity);
  }
  r.check("probability-sum", std::abs(sum - 1.0));
  r.check("probability-uniform", dev);
  r.check_below("fidelity-gap", gap, 1e-10);

  const ProtocolBatch batch = run_protocol_batch(psi, v, m, samples, rng());
  r.params["min_sampled_fidelity"] = std::to_string(batch.min_fidelity);
  r.check_below("sampled-fidelity-gap", 1.0 - batch.min_fidelity, 1e-10);
  r.check_below("frequencies-within-5-sigma", batch.max_sigma, 5.0);

  // Schmidt coefficients proportional to 1, 2, ..., d.
  CMatrix skew(ud * ud, 1);
  for (std::size_t i = 0; i < ud; ++i) skew[i * ud + i] = static_cast<double>(i + 1);
  skew *= 1.0 / skew.norm();
  const auto skewed = run_table(psi, make_setup(v, d, m, skew));
  double skew_gap = 0.0;
  for (const auto& o : skewed) skew_gap = std::max(skew_gap, 1.0 - o.row.fidelity);
  r.params["skewed_min_fidelity"] = std::to_string(1.0 - skew_gap);
  r.check_above("skewed-resource-infidelity", skew_gap, 1e-6);
  return r;
}

Report linearity_reduction_check(TeleportVariant v, int d, std::uint64_t seed, double tol) {
  if (is_projective(v)) throw DomainError("linearity_reduction_check takes equation variants");
  Report r("linearity-reduction", tol);
  r.seed = seed;
  r.params["variant"] = variant_name(v);
  std::mt19937_64 rng(seed);
  const int dd = v == TeleportVariant::Basic2 ? 2 : d;
  const auto ud = static_cast<std::size_t>(dd);
  r.params["d"] = std::to_string(dd);
  const CMatrix m = haar_unitary(ud, rng);
  const std::size_t b = std::uniform_int_distribution<std::size_t>(0, ud * ud - 1)(rng);
  TeleportEqCase c = TeleportEqCase::make(v, dd, m, b, CMatrix::basis_ket(ud, 0));

  std::vector<CMatrix> lhs_basis, rhs_basis;
  double basis_worst = 0.0, corrupt_worst = 0.0;
  for (std::size_t i = 0; i < ud; ++i) {
    c.psi = CMatrix::basis_ket(ud, i);
    auto [l, rr] = sides(c, 0);
    basis_worst = std::max(basis_worst, residual(l, rr));
    corrupt_worst = std::max(corrupt_worst, residual(l, sides(c, 1).second));
    lhs_basis.push_back(std::move(l));
    rhs_basis.push_back(std::move(rr));
  }
  r.check("basis-inputs", basis_worst);
  r.check_above("corrupted-correction", corrupt_worst, 1e-6);

  const CMatrix psi = random_state(ud, rng);
  c.psi = psi;
  const auto [lhs, rhs] = sides(c, 0);
  r.check("random-input", residual(lhs, rhs));
  CMatrix lhs_lin(lhs.rows(), 1), rhs_lin(rhs.rows(), 1);
  for (std::size_t i = 0; i < ud; ++i) {
    lhs_lin += psi[i] * lhs_basis[i];
    rhs_lin += psi[i] * rhs_basis[i];
  }
  r.check("left-linearity", residual(lhs, lhs_lin));
  r.check("right-linearity", residual(rhs, rhs_lin));

  if (is_nqubit(v) && ud >= 4) {
    // Resource from n interleaved Bell pairs moved to blocked order.
    const std::size_t n = qubits_for(dd);
    std::vector<CMatrix> pairs(n, bell2(0, 0));
    const CMatrix interleaved = tensor_all(pairs);
    const CMatrix blocked = apply_twist(interleaved, n);
    r.check("interleaved-resource", residual(blocked, multi_bell(BitString(n), BitString(n))));
    const UnitaryBasis words = pauli_word_basis(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < ud; ++i) {
      const CMatrix in = CMatrix::basis_ket(ud, i);
      CMatrix right(ud * ud * ud, 1);
      for (std::size_t a = 0; a < words.ops.size(); ++a) {
        right += tensor(bell_from_op(words.ops[a]), dagger(words.ops[a]) * in);
      }
      right *= 1.0 / dd;
      worst = std::max(worst, residual(tensor(in, blocked), right));
    }
    r.check("interleaved-equation", worst);
  }
  return r;
}

}  // namespace bellkit
