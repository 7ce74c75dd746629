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
#include <random>
#include <string>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/linalg.hpp"
#include "bellkit/report.hpp"

namespace bellkit {

/// A list of labelled two-party states. When built from a unitary basis the
/// local operators are kept so the family can be extended by M.
struct BasisFamily {
  /// Total Hilbert space dimension (d^2 for a d-level pair).
  std::size_t dim = 0;
  std::vector<CMatrix> states;
  std::vector<BellLabel> labels;
  /// U_a for each state, d x d; empty for ad-hoc families.
  std::vector<CMatrix> ops;

  /// States (U_a (x) 1)|Omega>.
  static BasisFamily from_unitaries(const UnitaryBasis& basis);
  static BasisFamily qubit_bell();
  static BasisFamily qudit_bell(int d);
  static BasisFamily multi_bell(std::size_t n);

  std::size_t size() const { return states.size(); }
  /// Local dimension d, i.e. sqrt(dim).
  std::size_t local_dim() const;
};

/// Max |<a|b> - delta_ab| over all pairs. Cases: "gram", plus "unit-norm".
Report gram_check(const BasisFamily& fam, double tol = kDefaultTol);
/// Max-abs residual of sum |a><a| against the identity ("completeness") and
/// ||family| - dim| ("family-size").
Report completeness_check(const BasisFamily& fam, double tol = kDefaultTol);

enum class Side { Left, Right };

/// Left: (M U_a (x) 1)|Omega>. Right: (U_a M (x) 1)|Omega>. M is d x d and
/// need not be unitary.
BasisFamily extend_basis(const BasisFamily& fam, const CMatrix& m, Side side);

/// u + eps G with G Gaussian, eps doubled until ||M^dagger M - 1||_2 >= min_dev.
CMatrix perturbed_nonunitary(const CMatrix& u, std::mt19937_64& rng, double min_dev = 0.1);

/// Unitary extensions must pass gram and completeness; perturbed extensions
/// must miss orthonormality by more than 1e-3. Both sides, `trials` of each.
/// Also checks the reduced completeness relation for a general M.
Report basis_theorem_suite(const BasisFamily& fam, std::size_t trials, std::uint64_t seed,
                           double tol = kDefaultTol);
/// Same, on the generalized Pauli family of dimension d (d <= 8).
Report basis_theorem_suite(int d, std::size_t trials, std::uint64_t seed,
                           double tol = kDefaultTol);

struct Eigenpair {
  BellLabel label;
  CMatrix state;
  double value = 0.0;
};

/// A Hermitian observable together with its closed-form eigenpairs.
struct ObservableSpec {
  std::string name;
  CMatrix matrix;
  std::vector<Eigenpair> eigenpairs;
};

/// A(k) = X^k (x) X^k and B(k) = Z^k (x) (Z^dagger)^k.
CMatrix observable_a(int d, int k);
CMatrix observable_b(int d, int k);

/// OX+(k), OX-(k), OZ+(k), OZ-(k) with eigenpairs on every |Omega(alpha beta)>.
/// Requires 1 <= k <= d-1.
std::vector<ObservableSpec> qudit_observables(int d, int k);

/// Left: (M (x) 1) O (M^dagger (x) 1) on (M U_a (x) 1)|Omega>.
/// Right: (1 (x) M^T) O (1 (x) M^*) on (U_a M (x) 1)|Omega>.
/// Throws DomainError when M is not unitary.
ObservableSpec conjugated_observable(const ObservableSpec& spec, const CMatrix& m, Side side);

/// X_k (x) X_{n+k} with eigenvalue (-1)^{alpha_k}, then Z_k (x) Z_{n+k} with
/// eigenvalue (-1)^{beta_k}, for k = 1..n (n <= 5).
std::vector<ObservableSpec> multiqubit_observables(std::size_t n);

/// Hermiticity and every eigenequation, one case per observable.
Report observable_check(const std::vector<ObservableSpec>& specs, double tol = kDefaultTol);
/// Commutators vanish and the eigenvalue pattern separates all 4^n states.
Report multiqubit_labeling_check(std::size_t n, double tol = kDefaultTol);

/// Row for word T_n(alpha beta) is vec(T^T)/2^n, so that row . vec(I) is
/// tr(I T)/2^n. Words in lexicographic (alpha, beta) order.
CMatrix trace_constraint_matrix(std::size_t n);
/// Solves trace_constraint_matrix(n) x = e_0 for the 4^n entries of I(n):
/// checks full rank, solution = identity, homogeneous solution = 0. For n = 1
/// also checks the four scalar equations tr(I), tr(IX), tr(IZX), tr(IZ).
Report trace_constraint_solve(std::size_t n, double tol = kDefaultTol);

}  // namespace bellkit
