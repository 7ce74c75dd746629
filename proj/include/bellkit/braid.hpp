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
#include <optional>
#include <utility>
#include <vector>

#include "bellkit/linalg.hpp"
#include "bellkit/pauli.hpp"
#include "bellkit/report.hpp"
#include "bellkit/verify.hpp"

namespace bellkit {

/// epsilon, eta in {+1, -1}.
struct BellTransformParams {
  int epsilon = 1;
  int eta = 1;

  /// Throws DomainError unless both are +1 or -1.
  void validate() const;
  BellTransformParams inverse() const { return {-epsilon, -eta}; }
  bool operator==(const BellTransformParams&) const = default;
};

/// All four sign pairs in the order (1,1), (1,-1), (-1,1), (-1,-1).
std::vector<BellTransformParams> all_sign_pairs();

/// (1/sqrt 2) [[1,0,0,eta],[0,1,eps,0],[0,-eps,1,0],[-eta,0,0,1]].
CMatrix bell_transform(BellTransformParams p);

/// f(eps, eta, i, j): i, i(j+1), ij or 0 (mod 2).
int sign_exponent(BellTransformParams p, int i, int j);

/// (i', j') with j' = i xor j and i' = i xor (|eps - eta|/2) j' xor (1 + eta)/2.
std::pair<int, int> primed_bits(BellTransformParams p, int i, int j);

/// |phi(i', j')> = (-1)^f B|ij> for all four inputs, plus unitarity and
/// B^dagger = B(-eps, -eta).
Report bell_action_check(BellTransformParams p, double tol = kDefaultTol);

CMatrix cnot_gate();
/// SWAP on two wires of dimension local_dim.
CMatrix swap_gate(std::size_t local_dim = 2);

/// (R (x) 1)(1 (x) R)(R (x) 1) against (1 (x) R)(R (x) 1)(1 (x) R).
Report yang_baxter_check(const CMatrix& r, std::size_t local_dim, double tol = kDefaultTol);

/// b_i = 1^{(i-1)} (x) gate (x) 1^{(n-i-1)} on qubits: braid relation for
/// neighbours, commutation for |i - j| >= 2. n in [3, 6].
Report braid_rep_check(std::size_t n, const CMatrix& gate, double tol = kDefaultTol);
Report braid_rep_check(std::size_t n, BellTransformParams p, double tol = kDefaultTol);

struct TLRep {
  std::size_t n = 0;
  int d = 2;
  std::vector<CMatrix> generators;
};

/// e_i = 1^{(i-1)} (x) |v><v|/<v|v> (x) 1^{(n-i-1)} with v = |Omega(alpha beta)>, or
/// |M Omega(alpha beta)> (left) / |Omega M(alpha beta)> (right) when M is given.
/// n in [2, 5], d in [2, 4].
TLRep tl_generators(std::size_t n, int d, int alpha, int beta,
                    const std::optional<CMatrix>& m = std::nullopt, Side side = Side::Left);

/// e_i^2 = e_i, e_i e_{i+-1} e_i = d^-2 e_i, e_i e_j = e_j e_i for |i - j| >= 2.
Report tl_relation_check(const TLRep& rep, double tol = kDefaultTol);

struct AbcExponents {
  int a = 0;
  int b = 0;
  int c = 0;
  bool operator==(const AbcExponents&) const = default;
};

/// a = f_l(k,m) xor f_r(i,j) xor k' j', b = j' xor m', c = i' xor k'.
AbcExponents correction_exponents(BellTransformParams left, BellTransformParams right, int i,
                                  int j, int k, int m);
/// Closed forms for right = (-eps_l, -eta_l), one row per left sign pair.
AbcExponents correction_table_exponents(BellTransformParams left, int i, int j, int k, int m);
/// (-1)^a X^b Z^c.
CMatrix abc_gate(AbcExponents e);

/// Table rows against the general exponents, exhaustively over all four
/// rows and 16 bit assignments.
Report correction_table_check(double tol = kDefaultTol);

/// (B(-eps_r,-eta_r) (x) 1)(1 (x) B(eps_l,eta_l))(psi (x) |km>) against
/// (1/2) sum |ij> (x) U psi, U = (-1)^{f_l + f_r} T^dag(k'm') T^dag(i'j'),
/// and U against (-1)^a X^b Z^c.
Report braid_teleport_single_check(BellTransformParams left, BellTransformParams right, int k,
                                   int m, const CMatrix& psi, double tol = kDefaultTol);

enum class TwistKind { Plain, Conjugated };

/// Sign strings use bit 1 for +1 and bit 0 for -1.
BellTransformParams sign_at(const BitString& eps, const BitString& eta, std::size_t i);
BitString sign_string(std::span<const int> signs);

/// Plain: tau (x)_i B(eps_i, eta_i). Conjugated: tau (x)_i B(eps_i, eta_i) tau^dag.
/// n in [1, 3].
CMatrix twisted_yb_gate(const BitString& eps, const BitString& eta, TwistKind kind);

/// (-1)^{sum f_l + sum f_r} T_n^dag(a'b') T_n^dag(alpha'beta') with per-pair signs.
CMatrix braid_correction(const BitString& eps_l, const BitString& eta_l, const BitString& eps_r,
                         const BitString& eta_r, const BitString& a, const BitString& b,
                         const BitString& alpha, const BitString& beta);

/// (G_r^dag (x) 1)(1 (x) G_l)(psi (x) |ab>) against (1/2^n) sum |alpha beta> (x) U psi
/// where U = (-1)^{sum f_l + sum f_r} T_n^dag(a'b') T_n^dag(alpha'beta'). For the
/// conjugated kind both |ab> and |alpha beta> are twisted into blocked order.
Report braid_teleport_multi_check(const BitString& eps_l, const BitString& eta_l,
                                  const BitString& eps_r, const BitString& eta_r,
                                  const BitString& a, const BitString& b, TwistKind kind,
                                  const CMatrix& psi, double tol = kDefaultTol);

/// Closed-form corrections for B(-1,1) on the left with k = m = 1, the unique
/// preimage of k' = m' = 0, and the two-pair case with B(-1,1) on both sides
/// and a = b = 11 (closed form plus both equation forms).
Report braid_worked_examples_check(std::uint64_t seed, double tol = kDefaultTol);

}  // namespace bellkit
