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
#include <string>
#include <vector>

#include "bellkit/circuit.hpp"
#include "bellkit/linalg.hpp"
#include "bellkit/pauli.hpp"
#include "bellkit/report.hpp"

namespace bellkit {

/// Largest pair count accepted by the 2n-qubit constructors.
inline constexpr std::size_t kMaxPairs = 6;

struct BellLabel {
  enum class Kind { Qubit2, Qudit2, Multi2n, Custom };

  Kind kind = Kind::Qubit2;
  int d = 2;
  int alpha = 0;
  int beta = 0;
  BitString alpha_bits;
  BitString beta_bits;

  static BellLabel qubit2(int alpha, int beta);
  static BellLabel qudit2(int d, int alpha, int beta);
  static BellLabel multi(const BitString& alpha, const BitString& beta);
  /// Label for a basis built from an arbitrary unitary family; index only.
  static BellLabel custom(int d, int index);

  std::string str() const;
  bool operator==(const BellLabel&) const = default;
};

/// The local unitary behind a Pauli-type label: T(alpha beta), Z^alpha X^beta
/// or T_n(alpha beta). Throws DomainError for Custom labels.
CMatrix label_operator(const BellLabel& label);

/// |Omega> = (1/sqrt d) sum_i |ii>.
CMatrix omega(int d);
/// (op (x) 1)|Omega> for a d x d operator.
CMatrix bell_from_op(const CMatrix& op);
/// |phi(alpha beta)> = (T(alpha beta) (x) 1)|phi>.
CMatrix bell2(int alpha, int beta);
/// |Omega(alpha beta)> = (Z^alpha X^beta (x) 1)|Omega>, generalized Pauli.
CMatrix qudit_bell(int d, int alpha, int beta);

/// perm[q] is the destination of wire q under the twist: wire 2k -> k,
/// wire 2k+1 -> n+k.
std::vector<std::size_t> twist_permutation(std::size_t n);
/// Permutation unitary |i1 j1 ... in jn> -> |i1 ... in j1 ... jn>.
CMatrix twist(std::size_t n);
/// Applies the twist (or its inverse) to a 2^{2n} state without a dense matrix.
CMatrix apply_twist(const CMatrix& state, std::size_t n, bool inverse = false);
/// Adjacent-SWAP circuit for twist(n), n(n-1)/2 gates.
Circuit twist_decomposition(std::size_t n);

/// |B_2n(alpha beta)> = (T_n(alpha beta) (x) 1)|B_2n>, blocked order.
CMatrix multi_bell(const BitString& alpha, const BitString& beta);
/// H on wires 0..n-1, CNOT(k, n+k), then X^beta and Z^alpha on wires 0..n-1.
Circuit prep_circuit(const BitString& alpha, const BitString& beta);

/// |j_1..j_n l_1..l_n>.
CMatrix product_ket(const BitString& j, const BitString& l);
/// (|j l> + sign |~j ~l>)/sqrt 2 with sign = +1 or -1.
CMatrix ghz(const BitString& j, const BitString& l, int sign);

/// Amplitudes of a 2n-qubit state in the multi-qubit Bell basis.
struct BellExpansion {
  std::size_t n = 0;
  /// Indexed by alpha.to_index() * 2^n + beta.to_index().
  std::vector<cplx> amplitudes;

  cplx amplitude(const BitString& alpha, const BitString& beta) const;
  CMatrix reconstruct() const;
  double norm_squared() const;
};

/// Throws DomainError unless state is a unit 2^{2n} column (1e-10).
BellExpansion expand_in_bell_basis(const CMatrix& state, std::size_t n);
/// |sum (-1)^{sum_k alpha_k xor beta_k} d(alpha beta)^2|.
double concurrence(const CMatrix& state, std::size_t n);
/// |<psi~|psi>| with psi~ = (-1)^n (ZX)^{(x)2n} psi*, applied wire by wire.
double concurrence_oracle(const CMatrix& state, std::size_t n);

/// Decomposition against the dense twist, SWAP count n(n-1)/2, the
/// matrix-free twist and its inverse; for n = 2 also tau = 1 (x) SWAP (x) 1.
Report twist_check(std::size_t n, double tol = kDefaultTol);

/// concurrence against the oracle on `samples` random states, then Bell
/// states (1), product kets (0) and GHZ states (1).
Report concurrence_check(std::size_t n, std::size_t samples, std::uint64_t seed,
                         double tol = kDefaultTol);

/// A list of d x d unitaries U_a with labels, the seed of a Bell family.
struct UnitaryBasis {
  int d = 2;
  std::vector<CMatrix> ops;
  std::vector<BellLabel> labels;
};

/// The four T(alpha beta).
UnitaryBasis qubit_pauli_basis();
/// The d^2 generalized Pauli matrices Z^alpha X^beta.
UnitaryBasis gen_pauli_basis(int d);
/// The 4^n words T_n(alpha beta).
UnitaryBasis pauli_word_basis(std::size_t n);
/// V U_a V^dagger for every U_a: still Hilbert-Schmidt orthonormal and
/// unitary, but no longer a Pauli family.
UnitaryBasis rotated_basis(const UnitaryBasis& base, const CMatrix& v);

}  // namespace bellkit
