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


#include "bellkit/braid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "bellkit/bell.hpp"

namespace bellkit {

namespace {

void require_bit(int v, const char* what) {
  if (v != 0 && v != 1) throw DomainError(std::string(what) + " must be 0 or 1");
}

std::string sign_str(BellTransformParams p) {
  return "(" + std::to_string(p.epsilon) + "," + std::to_string(p.eta) + ")";
}

CMatrix embed(const CMatrix& gate, std::size_t left, std::size_t right) {
  return tensor(tensor(CMatrix::identity(left), gate), CMatrix::identity(right));
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::vector<std::size_t> wire_range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> w(count);
  std::iota(w.begin(), w.end(), first);
  return w;
}

// |x_1 y_1 x_2 y_2 ...> as a basis index.
std::size_t interleaved_index(const BitString& x, const BitString& y) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = (idx << 2) | (x[i] << 1) | y[i];
  return idx;
}

}  // namespace

void BellTransformParams::validate() const {
  if ((epsilon != 1 && epsilon != -1) || (eta != 1 && eta != -1)) {
    throw DomainError("Bell transform signs must be +1 or -1, got " + sign_str(*this));
  }
}

std::vector<BellTransformParams> all_sign_pairs() { return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}; }

CMatrix bell_transform(BellTransformParams p) {
  p.validate();
  const double s = 1.0 / std::sqrt(2.0);
  const double e = p.epsilon * s;
  const double h = p.eta * s;
  return CMatrix{{s, 0, 0, h}, {0, s, e, 0}, {0, -e, s, 0}, {-h, 0, 0, s}};
}

int sign_exponent(BellTransformParams p, int i, int j) {
  p.validate();
  require_bit(i, "i");
  require_bit(j, "j");
  if (p.epsilon == -1 && p.eta == -1) return i;
  if (p.epsilon == -1 && p.eta == 1) return i & (j ^ 1);
  if (p.epsilon == 1 && p.eta == -1) return i & j;
  return 0;
}

std::pair<int, int> primed_bits(BellTransformParams p, int i, int j) {
  p.validate();
  require_bit(i, "i");
  require_bit(j, "j");
  const int jp = i ^ j;
  const int mix = std::abs(p.epsilon - p.eta) / 2;
  const int ip = i ^ (mix & jp) ^ ((1 + p.eta) / 2);
  return {ip, jp};
}

Report bell_action_check(BellTransformParams p, double tol) {
  Report r("bell-transform", tol);
  r.params["epsilon"] = std::to_string(p.epsilon);
  r.params["eta"] = std::to_string(p.eta);
  const CMatrix b = bell_transform(p);
  r.check("unitary", unitarity_residual(b));
  r.check("inverse", residual(dagger(b), bell_transform(p.inverse())));
  double worst = 0.0;
  std::set<std::pair<int, int>> images;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const CMatrix out = b * CMatrix::basis_ket(4, static_cast<std::size_t>(2 * i + j));
      const auto [ip, jp] = primed_bits(p, i, j);
      images.insert({ip, jp});
      const double sign = sign_exponent(p, i, j) ? -1.0 : 1.0;
      worst = std::max(worst, residual(out, sign * bell2(ip, jp)));
    }
  }
  r.check("action", worst);
  r.check_below("primed-bijection", static_cast<double>(4 - images.size()), 0.5);
  return r;
}

CMatrix cnot_gate() {
  return CMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

CMatrix swap_gate(std::size_t local_dim) {
  if (local_dim < 2) throw DomainError("swap_gate: local dimension must be at least 2");
  const std::size_t perm[2] = {1, 0};
  return permutation_matrix(perm, local_dim);
}

Report yang_baxter_check(const CMatrix& r, std::size_t local_dim, double tol) {
  if (local_dim < 2 || r.rows() != local_dim * local_dim || !r.is_square()) {
    throw ShapeError("yang_baxter_check: R must be d^2 x d^2 for local dimension d");
  }
  Report rep("ybe", tol);
  rep.params["local_dim"] = std::to_string(local_dim);
  const CMatrix r12 = embed(r, 1, local_dim);
  const CMatrix r23 = embed(r, local_dim, 1);
  rep.check("ybe", residual(r12 * r23 * r12, r23 * r12 * r23));
  return rep;
}

Report braid_rep_check(std::size_t n, const CMatrix& gate, double tol) {
  if (n < 3 || n > 6) throw DomainError("braid_rep_check: n must be in [3, 6]");
  if (gate.rows() != 4 || !gate.is_square()) throw ShapeError("braid_rep_check: gate must be 4x4");
  Report rep("braid", tol);
  rep.params["n"] = std::to_string(n);
  std::vector<CMatrix> b;
  for (std::size_t i = 0; i + 1 < n; ++i) b.push_back(embed(gate, ipow(2, i), ipow(2, n - i - 2)));
  double braid = 0.0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    braid = std::max(braid, residual(b[i] * b[i + 1] * b[i], b[i + 1] * b[i] * b[i + 1]));
  }
  rep.check("braid-relation", braid);
  if (b.size() >= 3) {
    double far = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 2; j < b.size(); ++j) {
        far = std::max(far, residual(b[i] * b[j], b[j] * b[i]));
      }
    }
    rep.check("far-commutation", far);
  }
  return rep;
}

Report braid_rep_check(std::size_t n, BellTransformParams p, double tol) {
  Report rep = braid_rep_check(n, bell_transform(p), tol);
  rep.params["epsilon"] = std::to_string(p.epsilon);
  rep.params["eta"] = std::to_string(p.eta);
  return rep;
}

TLRep tl_generators(std::size_t n, int d, int alpha, int beta, const std::optional<CMatrix>& m,
                    Side side) {
  if (n < 2 || n > 5) throw DomainError("tl_generators: n must be in [2, 5]");
  if (d < 2 || d > 4) throw DomainError("tl_generators: d must be in [2, 4]");
  const auto ud = static_cast<std::size_t>(d);
  CMatrix u = gen_word_matrix(GenPauliWord{d, alpha, beta, 0});
  if (m) {
    if (m->rows() != ud || !m->is_square()) throw ShapeError("tl_generators: M must be d x d");
    u = side == Side::Left ? (*m) * u : u * (*m);
  }
  const CMatrix v = bell_from_op(u);
  const double nn = std::real(inner(v, v));
  if (nn < 1e-300) throw DomainError("tl_generators: M annihilates the Bell state");
  CMatrix proj = outer(v, v);
  proj *= 1.0 / nn;
  TLRep rep{n, d, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rep.generators.push_back(embed(proj, ipow(ud, i), ipow(ud, n - i - 2)));
  }
  return rep;
}

Report tl_relation_check(const TLRep& rep, double tol) {
  Report r("tl", tol);
  r.params["n"] = std::to_string(rep.n);
  r.params["d"] = std::to_string(rep.d);
  const auto& e = rep.generators;
  const double inv_d2 = 1.0 / (static_cast<double>(rep.d) * rep.d);
  double idem = 0.0;
  for (const auto& g : e) idem = std::max(idem, residual(g * g, g));
  r.check("idempotent", idem);
  double rel = 0.0;
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    rel = std::max(rel, residual(e[i] * e[i + 1] * e[i], inv_d2 * e[i]));
    rel = std::max(rel, residual(e[i + 1] * e[i] * e[i + 1], inv_d2 * e[i + 1]));
  }
  r.check("relation", rel);
  if (e.size() >= 3) {
    double far = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 2; j < e.size(); ++j) {
        far = std::max(far, residual(e[i] * e[j], e[j] * e[i]));
      }
    }
    r.check("far-commutation", far);
  }
  return r;
}

AbcExponents correction_exponents(BellTransformParams left, BellTransformParams right, int i,
                                  int j, int k, int m) {
  const auto [kp, mp] = primed_bits(left, k, m);
  const auto [ip, jp] = primed_bits(right, i, j);
  AbcExponents e;
  e.a = sign_exponent(left, k, m) ^ sign_exponent(right, i, j) ^ (kp & jp);
  e.b = jp ^ mp;
  e.c = ip ^ kp;
  return e;
}

AbcExponents correction_table_exponents(BellTransformParams left, int i, int j, int k, int m) {
  left.validate();
  for (int v : {i, j, k, m}) require_bit(v, "bit");
  AbcExponents e;
  e.b = i ^ j ^ k ^ m;
  if (left.epsilon == -1 && left.eta == 1) {
    e.a = (i & j) ^ ((m ^ 1) & (i ^ j ^ k));
    e.c = j ^ m ^ 1;
  } else if (left.epsilon == 1 && left.eta == -1) {
    e.a = (i & (j ^ 1)) ^ (m & (i ^ j ^ k));
    e.c = j ^ m ^ 1;
  } else if (left.epsilon == 1 && left.eta == 1) {
    e.a = i ^ ((k ^ 1) & (i ^ j));
    e.c = i ^ k ^ 1;
  } else {
    e.a = k & (i ^ j ^ 1);
    e.c = i ^ k ^ 1;
  }
  return e;
}

CMatrix abc_gate(AbcExponents e) {
  for (int v : {e.a, e.b, e.c}) require_bit(v, "exponent");
  CMatrix u = pauli_t(e.c, 0);
  if (e.b) u = pauli_gate(Gate1::X) * u;
  if (e.a) u *= -1.0;
  return u;
}

Report correction_table_check(double tol) {
  Report r("braid-table", tol);
  double mismatches = 0.0;
  for (const auto& left : all_sign_pairs()) {
    for (int bits = 0; bits < 16; ++bits) {
      const int i = (bits >> 3) & 1, j = (bits >> 2) & 1, k = (bits >> 1) & 1, m = bits & 1;
      if (!(correction_table_exponents(left, i, j, k, m) ==
            correction_exponents(left, left.inverse(), i, j, k, m))) {
        mismatches += 1.0;
      }
    }
  }
  r.check_below("table-vs-general", mismatches, 0.5);
  return r;
}

Report braid_teleport_single_check(BellTransformParams left, BellTransformParams right, int k,
                                   int m, const CMatrix& psi, double tol) {
  require_bit(k, "k");
  require_bit(m, "m");
  if (psi.rows() != 2 || !psi.is_column()) throw ShapeError("psi must be a qubit column");
  Report r("braid-teleport", tol);
  r.params["left"] = sign_str(left);
  r.params["right"] = sign_str(right);
  r.params["km"] = std::to_string(k) + std::to_string(m);

  CMatrix lhs = tensor(psi, CMatrix::basis_ket(4, static_cast<std::size_t>(2 * k + m)));
  lhs = apply_on_wires(bell_transform(left), wire_range(1, 2), lhs, 3);
  lhs = apply_on_wires(bell_transform(right.inverse()), wire_range(0, 2), lhs, 3);

  const auto [kp, mp] = primed_bits(left, k, m);
  const CMatrix tk = dagger(pauli_t(kp, mp));
  CMatrix rhs(8, 1);
  double form = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto [ip, jp] = primed_bits(right, i, j);
      CMatrix u = tk * dagger(pauli_t(ip, jp));
      if (sign_exponent(left, k, m) ^ sign_exponent(right, i, j)) u *= -1.0;
      form = std::max(form, residual(u, abc_gate(correction_exponents(left, right, i, j, k, m))));
      rhs += tensor(CMatrix::basis_ket(4, static_cast<std::size_t>(2 * i + j)), u * psi);
    }
  }
  rhs *= 0.5;
  r.check("equation", residual(lhs, rhs));
  r.check("abc-form", form);
  return r;
}

BellTransformParams sign_at(const BitString& eps, const BitString& eta, std::size_t i) {
  return {eps[i] ? 1 : -1, eta[i] ? 1 : -1};
}

BitString sign_string(std::span<const int> signs) {
  BitString s(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw DomainError("signs must be +1 or -1");
    s.set(i, signs[i] == 1 ? 1 : 0);
  }
  return s;
}

CMatrix twisted_yb_gate(const BitString& eps, const BitString& eta, TwistKind kind) {
  const std::size_t n = eps.size();
  if (n < 1 || n > 3 || eta.size() != n) {
    throw DomainError("twisted_yb_gate: sign strings must have equal length in [1, 3]");
  }
  std::vector<CMatrix> factors;
  for (std::size_t i = 0; i < n; ++i) factors.push_back(bell_transform(sign_at(eps, eta, i)));
  const CMatrix tau = twist(n);
  CMatrix g = tau * tensor_all(factors);
  if (kind == TwistKind::Conjugated) g = g * dagger(tau);
  return g;
}

CMatrix braid_correction(const BitString& eps_l, const BitString& eta_l, const BitString& eps_r,
                         const BitString& eta_r, const BitString& a, const BitString& b,
                         const BitString& alpha, const BitString& beta) {
  const std::size_t n = a.size();
  BitString ap(n), bp(n), alp(n), bep(n);
  int f = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto pl = sign_at(eps_l, eta_l, i);
    const auto [x, y] = primed_bits(pl, a[i], b[i]);
    ap.set(i, x);
    bp.set(i, y);
    const auto pr = sign_at(eps_r, eta_r, i);
    const auto [u, v] = primed_bits(pr, alpha[i], beta[i]);
    alp.set(i, u);
    bep.set(i, v);
    f ^= sign_exponent(pl, a[i], b[i]) ^ sign_exponent(pr, alpha[i], beta[i]);
  }
  CMatrix u = dagger(word_matrix(PauliWord::from_labels(ap, bp))) *
              dagger(word_matrix(PauliWord::from_labels(alp, bep)));
  if (f) u *= -1.0;
  return u;
}

Report braid_teleport_multi_check(const BitString& eps_l, const BitString& eta_l,
                                  const BitString& eps_r, const BitString& eta_r,
                                  const BitString& a, const BitString& b, TwistKind kind,
                                  const CMatrix& psi, double tol) {
  const std::size_t n = eps_l.size();
  for (const BitString* s : {&eta_l, &eps_r, &eta_r, &a, &b}) {
    if (s->size() != n) throw DomainError("braid_teleport_multi_check: length mismatch");
  }
  const std::size_t dim = ipow(2, n);
  if (psi.rows() != dim || !psi.is_column()) throw ShapeError("psi must be a 2^n column");
  Report r("braid-teleport-multi", tol);
  r.params["n"] = std::to_string(n);
  r.params["kind"] = kind == TwistKind::Plain ? "plain" : "conjugated";
  r.params["ab"] = a.str() + "|" + b.str();

  const CMatrix gl = twisted_yb_gate(eps_l, eta_l, kind);
  const CMatrix gr_dag = dagger(twisted_yb_gate(eps_r, eta_r, kind));
  const std::size_t pair_dim = dim * dim;

  CMatrix in = CMatrix::basis_ket(pair_dim, interleaved_index(a, b));
  if (kind == TwistKind::Conjugated) in = apply_twist(in, n);
  CMatrix lhs = tensor(psi, in);
  lhs = apply_on_wires(gl, wire_range(n, 2 * n), lhs, 3 * n);
  lhs = apply_on_wires(gr_dag, wire_range(0, 2 * n), lhs, 3 * n);

  CMatrix rhs(pair_dim * dim, 1);
  for (std::size_t idx = 0; idx < pair_dim; ++idx) {
    const BitString al = BitString::from_index(idx >> n, n);
    const BitString be = BitString::from_index(idx & (dim - 1), n);
    const CMatrix u = braid_correction(eps_l, eta_l, eps_r, eta_r, a, b, al, be);
    CMatrix label = CMatrix::basis_ket(pair_dim, interleaved_index(al, be));
    if (kind == TwistKind::Conjugated) label = apply_twist(label, n);
    rhs += tensor(label, u * psi);
  }
  rhs *= 1.0 / static_cast<double>(dim);
  r.check("equation", residual(lhs, rhs));
  return r;
}

Report braid_worked_examples_check(std::uint64_t seed, double tol) {
  Report r("braid-worked", tol);
  r.seed = seed;
  const BellTransformParams minus_plus{-1, 1};
  const BellTransformParams plus_minus{1, -1};

  // B(-1,1) on the left with k = m = 1, and either B(1,-1) or B(-1,1) on the right.
  double first = 0.0, second = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CMatrix want1 = dagger(pauli_t(j ^ 1, i ^ j));
      if (i & (j ^ 1)) want1 *= -1.0;
      first = std::max(first, residual(abc_gate(correction_exponents(minus_plus, minus_plus, i, j,
                                                                     1, 1)),
                                       want1));
      CMatrix want2 = dagger(pauli_t(j, i ^ j));
      if (i & j) want2 *= -1.0;
      second = std::max(second, residual(abc_gate(correction_exponents(minus_plus, plus_minus, i,
                                                                       j, 1, 1)),
                                         want2));
    }
  }
  r.check("single-right-inverse-gate", first);
  r.check("single-same-gate", second);

  // k' = m' = 0 has exactly one preimage, k = m = (1 + eta)/2.
  double preimage = 0.0;
  for (const auto& p : all_sign_pairs()) {
    for (int k = 0; k < 2; ++k) {
      for (int m = 0; m < 2; ++m) {
        const bool zero = primed_bits(p, k, m) == std::pair<int, int>{0, 0};
        const bool want = k == (1 + p.eta) / 2 && m == k;
        if (zero != want) preimage += 1.0;
      }
    }
  }
  r.check_below("zero-resource-preimage", preimage, 0.5);

  // Two pairs with B(-1,1) on both sides and a = b = 11.
  const BitString eps_l("00"), eta_l("11"), eps_r("11"), eta_r("00"), ones("11");
  std::mt19937_64 rng(seed);
  double closed = 0.0;
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      const BitString al = BitString::from_index(x, 2), be = BitString::from_index(y, 2);
      CMatrix want = dagger(word_matrix(PauliWord::from_labels(be, al ^ be)));
      if (dot(al, be)) want *= -1.0;
      closed = std::max(closed, residual(braid_correction(eps_l, eta_l, eps_r, eta_r, ones, ones,
                                                          al, be),
                                         want));
    }
  }
  r.check("multi-correction", closed);
  const CMatrix psi = random_state(4, rng);
  for (auto kind : {TwistKind::Plain, TwistKind::Conjugated}) {
    const Report eq =
        braid_teleport_multi_check(eps_l, eta_l, eps_r, eta_r, ones, ones, kind, psi, tol);
    r.check(std::string("multi-equation-") + (kind == TwistKind::Plain ? "plain" : "conjugated"),
            eq.max_residual());
  }
  return r;
}

}  // namespace bellkit
