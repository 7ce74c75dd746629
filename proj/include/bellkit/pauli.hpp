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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bellkit/linalg.hpp"
#include "bellkit/report.hpp"

namespace bellkit {

/// Largest qubit count accepted by word_matrix.
inline constexpr std::size_t kMaxWordQubits = 12;

/// Fixed-length binary word. Bit 0 is the leftmost (most significant) bit, so
/// BitString("011").to_index() == 3.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n);
  /// Parses a string of '0'/'1' characters; throws DomainError otherwise.
  explicit BitString(std::string_view bits);

  static BitString from_index(std::size_t value, std::size_t n);
  static BitString zeros(std::size_t n) { return BitString(n); }
  static BitString ones(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, int bit);

  std::size_t to_index() const;
  std::size_t weight() const;
  std::string str() const;

  BitString operator^(const BitString& o) const;
  /// Complement of every bit.
  BitString operator~() const;
  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// alpha . beta = alpha_1 beta_1 xor ... xor alpha_n beta_n.
int dot(const BitString& a, const BitString& b);

/// Single-qubit gates from the computational-basis conventions.
enum class Gate1 { I, X, Z, H };

CMatrix pauli_gate(Gate1 g);
/// Accepts "I", "X", "Z", "H"; throws DomainError on anything else.
CMatrix pauli_gate(std::string_view name);

/// T(alpha beta) = Z^alpha X^beta for bits alpha, beta.
CMatrix pauli_t(int alpha, int beta);

/// omega^k with omega = exp(2 pi i / d), evaluated directly from k mod d.
cplx omega_pow(int d, long long k);

/// Shift matrix: X|i> = |i+1 mod d>.
CMatrix gen_x(int d);
/// Clock matrix: Z|i> = omega^i |i>.
CMatrix gen_z(int d);

/// (-1)^sign * (x)_k Z^{z_k} X^{x_k}.
struct PauliWord {
  BitString z;
  BitString x;
  int sign = 0;

  std::size_t n() const { return z.size(); }
  static PauliWord identity(std::size_t n);
  static PauliWord from_labels(const BitString& alpha, const BitString& beta, int sign = 0);
  bool operator==(const PauliWord&) const = default;
};

CMatrix word_matrix(const PauliWord& w);
/// Symbolic dagger: sign flips by alpha . beta.
PauliWord word_dagger(const PauliWord& w);
/// Symbolic product with exact sign tracking.
PauliWord word_mul(const PauliWord& a, const PauliWord& b);
std::string to_string(const PauliWord& w);

/// omega^gamma Z^alpha X^beta on a d-level system, exponents taken mod d.
struct GenPauliWord {
  int d = 2;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;

  bool operator==(const GenPauliWord&) const = default;
};

GenPauliWord normalized(GenPauliWord w);
CMatrix gen_word_matrix(const GenPauliWord& w);
/// (omega^g U_ab)^dagger = omega^{(d-1)g + (d-1)^3 ab} U_{(d-1)a,(d-1)b}.
GenPauliWord gen_word_dagger(const GenPauliWord& w);
/// Uses X^b Z^a = omega^{-ab} Z^a X^b to keep the product in normal order.
GenPauliWord gen_word_mul(const GenPauliWord& a, const GenPauliWord& b);

/// All 2 * 4^n signed words on n qubits.
std::vector<PauliWord> all_signed_words(std::size_t n);
/// All d^3 words omega^g Z^a X^b.
std::vector<GenPauliWord> all_phased_gen_words(int d);

/// Checks that `elements` forms a basis group: all unitary, closed under
/// products and conjugate transpose (up to tol), and one representative per
/// phase class is Hilbert-Schmidt orthonormal. Failures name a witness.
Report basis_group_check(std::span<const CMatrix> elements, double tol = kDefaultTol);

}  // namespace bellkit
