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

#include "bellkit/bell.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

namespace bellkit {

namespace {

void require_pairs(std::size_t n) {
  if (n < 1 || n > kMaxPairs) {
    throw DomainError("pair count must be in [1, 6], got " + std::to_string(n));
  }
}

void require_labels(const BitString& alpha, const BitString& beta) {
  if (alpha.size() != beta.size()) {
    throw ShapeError("label lengths differ: " + std::to_string(alpha.size()) + " vs " +
                     std::to_string(beta.size()));
  }
  require_pairs(alpha.size());
}

void require_unit_state(const CMatrix& state, std::size_t n) {
  const std::size_t dim = std::size_t{1} << (2 * n);
  if (!state.is_column() || state.rows() != dim) {
    throw ShapeError("expected a " + std::to_string(dim) + "-dim column state");
  }
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    throw DomainError("state is not normalized (norm " + std::to_string(state.norm()) + ")");
  }
}

}  // namespace

BellLabel BellLabel::qubit2(int alpha, int beta) {
  if ((alpha & ~1) || (beta & ~1)) throw DomainError("qubit Bell labels are single bits");
  BellLabel l;
  l.kind = Kind::Qubit2;
  l.d = 2;
  l.alpha = alpha;
  l.beta = beta;
  return l;
}

BellLabel BellLabel::qudit2(int d, int alpha, int beta) {
  if (d < 2) throw DomainError("qudit dimension must be at least 2");
  if (alpha < 0 || alpha >= d || beta < 0 || beta >= d) {
    throw DomainError("qudit Bell labels must lie in [0, d)");
  }
  BellLabel l;
  l.kind = Kind::Qudit2;
  l.d = d;
  l.alpha = alpha;
  l.beta = beta;
  return l;
}

BellLabel BellLabel::multi(const BitString& alpha, const BitString& beta) {
  require_labels(alpha, beta);
  BellLabel l;
  l.kind = Kind::Multi2n;
  l.d = 1 << alpha.size();
  l.alpha_bits = alpha;
  l.beta_bits = beta;
  return l;
}

BellLabel BellLabel::custom(int d, int index) {
  BellLabel l;
  l.kind = Kind::Custom;
  l.d = d;
  l.alpha = index;
  return l;
}

std::string BellLabel::str() const {
  switch (kind) {
    case Kind::Qubit2:
      return std::to_string(alpha) + std::to_string(beta);
    case Kind::Qudit2:
      return std::to_string(alpha) + "," + std::to_string(beta);
    case Kind::Multi2n:
      return alpha_bits.str() + "|" + beta_bits.str();
    case Kind::Custom:
      return "#" + std::to_string(alpha);
  }
  return "?";
}

CMatrix label_operator(const BellLabel& label) {
  switch (label.kind) {
    case BellLabel::Kind::Qubit2:
      return pauli_t(label.alpha, label.beta);
    case BellLabel::Kind::Qudit2:
      return gen_word_matrix(GenPauliWord{label.d, label.alpha, label.beta, 0});
    case BellLabel::Kind::Multi2n:
      return word_matrix(PauliWord::from_labels(label.alpha_bits, label.beta_bits));
    case BellLabel::Kind::Custom:
      break;
  }
  throw DomainError("label " + label.str() + " has no canonical operator");
}

CMatrix omega(int d) {
  if (d < 2) throw DomainError("omega: d must be at least 2, got " + std::to_string(d));
  const std::size_t ud = static_cast<std::size_t>(d);
  CMatrix v(ud * ud, 1);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < ud; ++i) v[i * ud + i] = s;
  return v;
}

CMatrix bell_from_op(const CMatrix& op) {
  if (!op.is_square()) throw ShapeError("bell_from_op: operator must be square");
  const int d = static_cast<int>(op.rows());
  return apply_left(op, omega(d), op.rows());
}

CMatrix bell2(int alpha, int beta) {
  if ((alpha & ~1) || (beta & ~1)) throw DomainError("bell2 labels are single bits");
  return bell_from_op(pauli_t(alpha, beta));
}

CMatrix qudit_bell(int d, int alpha, int beta) {
  BellLabel::qudit2(d, alpha, beta);
  return bell_from_op(gen_word_matrix(GenPauliWord{d, alpha, beta, 0}));
}

std::vector<std::size_t> twist_permutation(std::size_t n) {
  require_pairs(n);
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    perm[2 * k] = k;
    perm[2 * k + 1] = n + k;
  }
  return perm;
}

CMatrix twist(std::size_t n) {
  const auto perm = twist_permutation(n);
  return permutation_matrix(perm, 2);
}

CMatrix apply_twist(const CMatrix& state, std::size_t n, bool inverse) {
  const auto perm = twist_permutation(n);
  const std::size_t wires = 2 * n;
  const std::size_t dim = std::size_t{1} << wires;
  if (!state.is_column() || state.rows() != dim) throw ShapeError("apply_twist: state size");
  CMatrix out(dim, 1);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (std::size_t q = 0; q < wires; ++q) {
      const std::size_t bit = (x >> (wires - 1 - q)) & 1U;
      y |= bit << (wires - 1 - perm[q]);
    }
    if (inverse) {
      out[x] = state[y];
    } else {
      out[y] = state[x];
    }
  }
  return out;
}

Circuit twist_decomposition(std::size_t n) {
  require_pairs(n);
  Circuit c(2 * n);
  // Move the j_k qubit (wire 2k-1) right past i_{k+1}..i_n, last pair first.
  for (std::size_t k = n - 1; k >= 1; --k) {
    for (std::size_t t = 0; t + k < n; ++t) c.swap(2 * k - 1 + t, 2 * k + t);
  }
  return c;
}

CMatrix multi_bell(const BitString& alpha, const BitString& beta) {
  require_labels(alpha, beta);
  const std::size_t n = alpha.size();
  const std::size_t half = std::size_t{1} << n;
  const std::size_t a = alpha.to_index();
  const std::size_t b = beta.to_index();
  const double s = 1.0 / std::sqrt(static_cast<double>(half));
  CMatrix v(half * half, 1);
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t top = i ^ b;
    v[top * half + i] = (std::popcount(a & top) & 1) ? -s : s;
  }
  return v;
}

Circuit prep_circuit(const BitString& alpha, const BitString& beta) {
  require_labels(alpha, beta);
  const std::size_t n = alpha.size();
  Circuit c(2 * n);
  for (std::size_t k = 0; k < n; ++k) c.h(k);
  for (std::size_t k = 0; k < n; ++k) c.cnot(k, n + k);
  for (std::size_t k = 0; k < n; ++k) {
    if (beta[k]) c.x(k);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (alpha[k]) c.z(k);
  }
  return c;
}

CMatrix product_ket(const BitString& j, const BitString& l) {
  require_labels(j, l);
  const std::size_t n = j.size();
  return CMatrix::basis_ket(std::size_t{1} << (2 * n), (j.to_index() << n) | l.to_index());
}

CMatrix ghz(const BitString& j, const BitString& l, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("ghz sign must be +1 or -1");
  const double s = 1.0 / std::numbers::sqrt2;
  return s * product_ket(j, l) + (sign * s) * product_ket(~j, ~l);
}

cplx BellExpansion::amplitude(const BitString& alpha, const BitString& beta) const {
  if (alpha.size() != n || beta.size() != n) throw ShapeError("label length mismatch");
  return amplitudes[(alpha.to_index() << n) | beta.to_index()];
}

CMatrix BellExpansion::reconstruct() const {
  const std::size_t half = std::size_t{1} << n;
  CMatrix v(half * half, 1);
  for (std::size_t a = 0; a < half; ++a) {
    for (std::size_t b = 0; b < half; ++b) {
      const cplx c = amplitudes[a * half + b];
      if (c == cplx{}) continue;
      v += c * multi_bell(BitString::from_index(a, n), BitString::from_index(b, n));
    }
  }
  return v;
}

double BellExpansion::norm_squared() const {
  double s = 0.0;
  for (const auto& c : amplitudes) s += std::norm(c);
  return s;
}

BellExpansion expand_in_bell_basis(const CMatrix& state, std::size_t n) {
  require_pairs(n);
  require_unit_state(state, n);
  const std::size_t half = std::size_t{1} << n;
  const double s = 1.0 / std::sqrt(static_cast<double>(half));
  BellExpansion e;
  e.n = n;
  e.amplitudes.assign(half * half, cplx{});
  // <B(a b)|psi> = s * sum_i (-1)^{a . (i xor b)} psi[(i xor b), i].
  for (std::size_t a = 0; a < half; ++a) {
    for (std::size_t b = 0; b < half; ++b) {
      cplx acc{};
      for (std::size_t i = 0; i < half; ++i) {
        const std::size_t top = i ^ b;
        const cplx v = state[top * half + i];
        acc += (std::popcount(a & top) & 1) ? -v : v;
      }
      e.amplitudes[a * half + b] = s * acc;
    }
  }
  return e;
}

double concurrence(const CMatrix& state, std::size_t n) {
  const BellExpansion e = expand_in_bell_basis(state, n);
  const std::size_t half = std::size_t{1} << n;
  cplx sum{};
  for (std::size_t a = 0; a < half; ++a) {
    for (std::size_t b = 0; b < half; ++b) {
      const cplx c = e.amplitudes[a * half + b];
      sum += (std::popcount(a ^ b) & 1) ? -c * c : c * c;
    }
  }
  return std::abs(sum);
}

double concurrence_oracle(const CMatrix& state, std::size_t n) {
  require_pairs(n);
  require_unit_state(state, n);
  const CMatrix zx = mul(pauli_gate(Gate1::Z), pauli_gate(Gate1::X));
  CMatrix flipped = conj(state);
  for (std::size_t w = 0; w < 2 * n; ++w) {
    const std::size_t wire[1] = {w};
    flipped = apply_on_wires(zx, wire, flipped, 2 * n);
  }
  if (n % 2 == 1) flipped *= -1.0;
  return std::abs(inner(flipped, state));
}

UnitaryBasis qubit_pauli_basis() {
  UnitaryBasis b;
  b.d = 2;
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      b.ops.push_back(pauli_t(a, c));
      b.labels.push_back(BellLabel::qubit2(a, c));
    }
  }
  return b;
}

UnitaryBasis gen_pauli_basis(int d) {
  UnitaryBasis b;
  b.d = d;
  for (int a = 0; a < d; ++a) {
    for (int c = 0; c < d; ++c) {
      b.ops.push_back(gen_word_matrix(GenPauliWord{d, a, c, 0}));
      b.labels.push_back(BellLabel::qudit2(d, a, c));
    }
  }
  return b;
}

UnitaryBasis pauli_word_basis(std::size_t n) {
  require_pairs(n);
  UnitaryBasis b;
  b.d = 1 << n;
  const std::size_t half = std::size_t{1} << n;
  for (std::size_t a = 0; a < half; ++a) {
    for (std::size_t c = 0; c < half; ++c) {
      const BitString alpha = BitString::from_index(a, n);
      const BitString beta = BitString::from_index(c, n);
      b.ops.push_back(word_matrix(PauliWord::from_labels(alpha, beta)));
      b.labels.push_back(BellLabel::multi(alpha, beta));
    }
  }
  return b;
}

UnitaryBasis rotated_basis(const UnitaryBasis& base, const CMatrix& v) {
  if (!v.is_square() || v.rows() != static_cast<std::size_t>(base.d)) {
    throw ShapeError("rotated_basis: rotation must be d x d");
  }
  UnitaryBasis b;
  b.d = base.d;
  const CMatrix vd = dagger(v);
  for (std::size_t i = 0; i < base.ops.size(); ++i) {
    b.ops.push_back(v * base.ops[i] * vd);
    b.labels.push_back(BellLabel::custom(base.d, static_cast<int>(i)));
  }
  return b;
}

Report twist_check(std::size_t n, double tol) {
  if (n < 1 || 2 * n > kMaxCircuitMatrixWires) {
    throw DomainError("twist_check: n must be in [1, 5], got " + std::to_string(n));
  }
  Report r("twist", tol);
  r.params["n"] = std::to_string(n);
  const CMatrix tau = twist(n);
  const Circuit c = twist_decomposition(n);
  r.check("decomposition", residual(c.to_matrix(), tau));
  const double expected = static_cast<double>(n * (n - 1) / 2);
  r.check_below("swap-count", std::abs(static_cast<double>(c.count(GateKind::SWAP)) - expected),
                0.5);
  r.check_below("only-swaps", static_cast<double>(c.size() - c.count(GateKind::SWAP)), 0.5);
  const std::size_t dim = tau.rows();
  double worst = 0.0;
  for (std::size_t x = 0; x < dim; ++x) {
    const CMatrix e = CMatrix::basis_ket(dim, x);
    worst = std::max(worst, residual(apply_twist(e, n), tau * e));
    worst = std::max(worst, residual(apply_twist(e, n, true), dagger(tau) * e));
  }
  r.check("matrix-free", worst);
  if (n == 2) {
    const CMatrix mid = tensor(tensor(CMatrix::identity(2), permutation_matrix(
        std::vector<std::size_t>{1, 0}, 2)), CMatrix::identity(2));
    r.check("middle-swap", residual(tau, mid));
  }
  return r;
}

Report concurrence_check(std::size_t n, std::size_t samples, std::uint64_t seed, double tol) {
  require_pairs(n);
  Report r("concurrence", tol);
  r.seed = seed;
  r.params["n"] = std::to_string(n);
  r.params["samples"] = std::to_string(samples);
  std::mt19937_64 rng(seed);
  const std::size_t dim = std::size_t{1} << (2 * n);
  double oracle = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const CMatrix psi = random_state(dim, rng);
    oracle = std::max(oracle, std::abs(concurrence(psi, n) - concurrence_oracle(psi, n)));
  }
  r.check("oracle-agreement", oracle);
  const std::size_t labels = std::size_t{1} << n;
  double bell = 0.0, product = 0.0, ghz_dev = 0.0;
  for (std::size_t a = 0; a < labels; ++a) {
    for (std::size_t b = 0; b < labels; ++b) {
      const BitString x = BitString::from_index(a, n);
      const BitString y = BitString::from_index(b, n);
      bell = std::max(bell, std::abs(concurrence(multi_bell(x, y), n) - 1.0));
      product = std::max(product, concurrence(product_ket(x, y), n));
      for (int sign : {1, -1}) {
        ghz_dev = std::max(ghz_dev, std::abs(concurrence(ghz(x, y, sign), n) - 1.0));
      }
    }
  }
  r.check("bell-states", bell);
  r.check("product-kets", product);
  r.check("ghz", ghz_dev);
  return r;
}

}  // namespace bellkit
