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

#include "bellkit/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace bellkit {

namespace {

int mod(long long a, int d) {
  const long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

void require_dim(int d) {
  if (d < 2) throw DomainError("local dimension must be at least 2, got " + std::to_string(d));
}

}  // namespace

// ---------------------------------------------------------------------------
// BitString

BitString::BitString(std::size_t n) : bits_(n, 0) {}

BitString::BitString(std::string_view bits) {
  bits_.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw DomainError("bit string may only contain '0' and '1': \"" + std::string(bits) + "\"");
    }
    bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
}

BitString BitString::from_index(std::size_t value, std::size_t n) {
  if (n < 64 && value >> n != 0) throw DomainError("index does not fit in bit string");
  BitString b(n);
  for (std::size_t i = 0; i < n; ++i) b.bits_[n - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
  return b;
}

BitString BitString::ones(std::size_t n) {
  BitString b(n);
  for (auto& x : b.bits_) x = 1;
  return b;
}

void BitString::set(std::size_t i, int bit) { bits_.at(i) = static_cast<std::uint8_t>(bit & 1); }

std::size_t BitString::to_index() const {
  std::size_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::size_t BitString::weight() const {
  std::size_t w = 0;
  for (auto b : bits_) w += b;
  return w;
}

std::string BitString::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

BitString BitString::operator^(const BitString& o) const {
  if (o.size() != size()) throw ShapeError("bit string length mismatch");
  BitString r(size());
  for (std::size_t i = 0; i < size(); ++i) r.bits_[i] = bits_[i] ^ o.bits_[i];
  return r;
}

BitString BitString::operator~() const {
  BitString r(size());
  for (std::size_t i = 0; i < size(); ++i) r.bits_[i] = bits_[i] ^ 1U;
  return r;
}

int dot(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw ShapeError("dot: bit string length mismatch");
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s ^= a[i] & b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Gates

CMatrix pauli_gate(Gate1 g) {
  switch (g) {
    case Gate1::I:
      return CMatrix::identity(2);
    case Gate1::X:
      return CMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case Gate1::Z:
      return CMatrix{{1.0, 0.0}, {0.0, -1.0}};
    case Gate1::H: {
      const double s = 1.0 / std::numbers::sqrt2;
      return CMatrix{{s, s}, {s, -s}};
    }
  }
  throw DomainError("unknown gate");
}

CMatrix pauli_gate(std::string_view name) {
  if (name == "I") return pauli_gate(Gate1::I);
  if (name == "X") return pauli_gate(Gate1::X);
  if (name == "Z") return pauli_gate(Gate1::Z);
  if (name == "H") return pauli_gate(Gate1::H);
  throw DomainError("unknown gate name: " + std::string(name));
}

CMatrix pauli_t(int alpha, int beta) {
  CMatrix t = CMatrix::identity(2);
  if (alpha & 1) t = mul(t, pauli_gate(Gate1::Z));
  if (beta & 1) t = mul(t, pauli_gate(Gate1::X));
  return t;
}

cplx omega_pow(int d, long long k) {
  require_dim(d);
  const double angle = 2.0 * std::numbers::pi * mod(k, d) / d;
  return std::polar(1.0, angle);
}

CMatrix gen_x(int d) {
  require_dim(d);
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i) m((i + 1) % d, i) = 1.0;
  return m;
}

CMatrix gen_z(int d) {
  require_dim(d);
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = omega_pow(d, i);
  return m;
}

// ---------------------------------------------------------------------------
// Qubit words

PauliWord PauliWord::identity(std::size_t n) { return PauliWord{BitString(n), BitString(n), 0}; }

PauliWord PauliWord::from_labels(const BitString& alpha, const BitString& beta, int sign) {
  if (alpha.size() != beta.size()) throw ShapeError("Pauli word label length mismatch");
  return PauliWord{alpha, beta, sign & 1};
}

CMatrix word_matrix(const PauliWord& w) {
  const std::size_t n = w.n();
  if (n == 0 || w.x.size() != n) throw ShapeError("Pauli word exponent lengths differ or are empty");
  if (n > kMaxWordQubits) {
    throw SizeLimitError("Pauli word on " + std::to_string(n) + " qubits exceeds cap of 12");
  }
  // Z^a X^b is monomial: column c maps to row c ^ x with sign (-1)^{z . row}.
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t xmask = w.x.to_index();
  const std::size_t zmask = w.z.to_index();
  CMatrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const std::size_t r = c ^ xmask;
    const int parity = (std::popcount(r & zmask) + w.sign) & 1;
    m(r, c) = parity ? -1.0 : 1.0;
  }
  return m;
}

PauliWord word_dagger(const PauliWord& w) {
  return PauliWord{w.z, w.x, w.sign ^ dot(w.z, w.x)};
}

PauliWord word_mul(const PauliWord& a, const PauliWord& b) {
  if (a.n() != b.n()) throw ShapeError("word_mul: qubit count mismatch");
  // Z^a1 X^b1 Z^a2 X^b2 = (-1)^{b1 a2} Z^{a1+a2} X^{b1+b2} per qubit.
  return PauliWord{a.z ^ b.z, a.x ^ b.x, a.sign ^ b.sign ^ dot(a.x, b.z)};
}

std::string to_string(const PauliWord& w) {
  std::string s = w.sign ? "-" : "+";
  for (std::size_t k = 0; k < w.n(); ++k) {
    const int z = w.z[k], x = w.x[k];
    s += z && x ? "ZX" : z ? "Z" : x ? "X" : "I";
    if (k + 1 < w.n()) s += ".";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Qudit words

GenPauliWord normalized(GenPauliWord w) {
  require_dim(w.d);
  w.alpha = mod(w.alpha, w.d);
  w.beta = mod(w.beta, w.d);
  w.gamma = mod(w.gamma, w.d);
  return w;
}

CMatrix gen_word_matrix(const GenPauliWord& word) {
  const GenPauliWord w = normalized(word);
  const int d = w.d;
  // omega^g Z^a X^b |i> = omega^{g + a (i+b)} |i+b>.
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    const int r = (i + w.beta) % d;
    m(r, i) = omega_pow(d, static_cast<long long>(w.gamma) + static_cast<long long>(w.alpha) * r);
  }
  return m;
}

GenPauliWord gen_word_dagger(const GenPauliWord& word) {
  const GenPauliWord w = normalized(word);
  const long long d = w.d;
  const long long dm1 = d - 1;
  const long long phase = dm1 * w.gamma + dm1 * dm1 * dm1 * w.alpha * w.beta;
  return normalized(GenPauliWord{w.d, static_cast<int>(mod(dm1 * w.alpha, w.d)),
                                 static_cast<int>(mod(dm1 * w.beta, w.d)),
                                 mod(phase, w.d)});
}

GenPauliWord gen_word_mul(const GenPauliWord& a, const GenPauliWord& b) {
  if (a.d != b.d) throw ShapeError("gen_word_mul: dimension mismatch");
  const GenPauliWord x = normalized(a), y = normalized(b);
  const long long phase = static_cast<long long>(x.gamma) + y.gamma -
                          static_cast<long long>(x.beta) * y.alpha;
  return normalized(GenPauliWord{x.d, x.alpha + y.alpha, x.beta + y.beta, mod(phase, x.d)});
}

std::vector<PauliWord> all_signed_words(std::size_t n) {
  std::vector<PauliWord> out;
  const std::size_t count = std::size_t{1} << n;
  for (int s = 0; s < 2; ++s) {
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        out.push_back(PauliWord{BitString::from_index(a, n), BitString::from_index(b, n), s});
      }
    }
  }
  return out;
}

std::vector<GenPauliWord> all_phased_gen_words(int d) {
  require_dim(d);
  std::vector<GenPauliWord> out;
  for (int g = 0; g < d; ++g) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) out.push_back(GenPauliWord{d, a, b, g});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basis group

namespace {

// Index of the element of `set` matching m within tol, or -1.
long find_match(std::span<const CMatrix> set, const CMatrix& m, double tol, double* best) {
  double best_res = 1e300;
  long best_idx = -1;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double r = residual(set[i], m);
    if (r < best_res) {
      best_res = r;
      best_idx = static_cast<long>(i);
    }
  }
  *best = best_res;
  return best_res < tol ? best_idx : -1;
}

}  // namespace

Report basis_group_check(std::span<const CMatrix> elements, double tol) {
  Report rep("basis-group", tol);
  if (elements.empty()) throw DomainError("basis_group_check: empty set");
  const std::size_t d = elements.front().rows();
  rep.params["size"] = std::to_string(elements.size());
  rep.params["d"] = std::to_string(d);
  for (const auto& e : elements) {
    if (!e.is_square() || e.rows() != d) throw ShapeError("basis_group_check: mixed shapes");
  }

  double worst_unitary = 0.0;
  std::string unitary_witness = "none";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const double r = unitarity_residual(elements[i]);
    if (r > worst_unitary) {
      worst_unitary = r;
      unitary_witness = std::to_string(i);
    }
  }
  rep.params["unitary_witness"] = worst_unitary < tol ? "none" : unitary_witness;
  rep.check("unitary", worst_unitary);

  double worst_dagger = 0.0;
  std::string dagger_witness = "none";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    double best = 0.0;
    if (find_match(elements, dagger(elements[i]), tol, &best) < 0 && best > worst_dagger) {
      dagger_witness = std::to_string(i);
    }
    worst_dagger = std::max(worst_dagger, best);
  }
  rep.params["dagger_witness"] = dagger_witness;
  rep.check("closure-dagger", worst_dagger);

  double worst_mul = 0.0;
  std::string mul_witness = "none";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      double best = 0.0;
      if (find_match(elements, mul(elements[i], elements[j]), tol, &best) < 0 &&
          mul_witness == "none") {
        mul_witness = std::to_string(i) + "," + std::to_string(j);
      }
      worst_mul = std::max(worst_mul, best);
    }
  }
  rep.params["mul_witness"] = mul_witness;
  rep.check("closure-mul", worst_mul);

  // One representative per phase class: B ~ A iff B = c A with |c| = 1.
  std::vector<const CMatrix*> reps;
  for (const auto& e : elements) {
    bool known = false;
    for (const CMatrix* r : reps) {
      const cplx c = hs_inner(*r, e);
      if (std::abs(std::abs(c) - 1.0) < 1e-9 && residual(e, c * *r) < 1e-9) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back(&e);
  }
  rep.params["phase_classes"] = std::to_string(reps.size());
  double worst_gram = 0.0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const cplx g = hs_inner(*reps[i], *reps[j]);
      worst_gram = std::max(worst_gram, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  rep.check("hs-orthonormal", worst_gram);
  return rep;
}

}  // namespace bellkit
