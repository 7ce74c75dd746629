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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/linalg.hpp"
#include "bellkit/report.hpp"

namespace bellkit {

// Layout for every equation: psi (sender) (x) A (sender half of the resource)
// (x) B (receiver), each of dimension d; n-qubit variants use d = 2^n with A
// and B in blocked order.

enum class TeleportVariant {
  Qudit11,
  Qudit22,
  Qudit11p,
  Qudit22p,
  NQubit11,
  NQubit22,
  ProjectiveQudit,
  ProjectiveNQubit,
  Basic2,
};

std::string variant_name(TeleportVariant v);
/// Accepts the names produced by variant_name; throws DomainError otherwise.
TeleportVariant variant_from_name(std::string_view name);

/// Which measurement family a projective case uses.
///   Form11: resource (1 (x) M)|Omega>, measure |Omega(a)>, Bob holds M U_a^dag psi.
///   Form22: resource (M (x) 1)|Omega>, measure (U_a M^T (x) 1)|Omega>, Bob holds U_a^dag psi.
enum class ProjectiveForm { Form11, Form22 };

struct TeleportEqCase {
  TeleportVariant variant = TeleportVariant::Basic2;
  /// Local dimension of psi (2^n for n-qubit variants).
  int d = 2;
  /// The unitary family U_a defining the measurement basis.
  UnitaryBasis basis;
  /// d x d; must be unitary for the 22 variants.
  CMatrix m;
  /// Index into basis of the resource label (b, or a'b').
  std::size_t b = 0;
  CMatrix psi;
  ProjectiveForm form = ProjectiveForm::Form22;

  /// Generalized Pauli basis (or T_n for n-qubit variants), the given M and
  /// label. d is 2^n for n-qubit variants.
  static TeleportEqCase make(TeleportVariant v, int d, const CMatrix& m, std::size_t b,
                             const CMatrix& psi);
};

/// (<Omega|_CA (x) 1)(psi_C (x) Omega_AB) against psi_B / d for the basis
/// kets and `samples` random psi.
Report transfer_identity_check(int d, std::size_t samples, std::uint64_t seed,
                               double tol = kDefaultTol);

/// Both sides of the equation as full d^3 vectors. Left first.
std::pair<CMatrix, CMatrix> teleport_eq_sides(const TeleportEqCase& c);
/// Max-abs residual between the sides. Cases "equation" and, for n-qubit
/// variants, "transpose-is-dagger".
Report teleport_eq_check(const TeleportEqCase& c, double tol = kDefaultTol);

/// Projected state (P_a (x) 1)(psi (x) resource) and its closed form, for
/// every outcome a; Born probabilities; fidelity after correction.
Report projective_eq_check(const TeleportEqCase& c, double tol = kDefaultTol);

enum class ProtocolVariant { Basic2, Qudit11, Qudit22, NQubit11, NQubit22 };

std::string protocol_name(ProtocolVariant v);
ProtocolVariant protocol_from_name(std::string_view name);

struct OutcomeRow {
  std::string label;
  double probability = 0.0;
  /// |<psi|corrected output>|.
  double fidelity = 0.0;
  std::string correction;
};

struct ProtocolTranscript {
  std::string variant;
  int d = 2;
  std::uint64_t seed = 0;
  std::size_t outcome = 0;
  std::string outcome_label;
  double probability = 0.0;
  std::string correction;
  CMatrix output;
  double fidelity = 0.0;
};

/// Deterministic table over every outcome. The resource is built from M and
/// the variant; M must be unitary. Throws DomainError otherwise.
std::vector<OutcomeRow> outcome_table(const CMatrix& psi, ProtocolVariant v, const CMatrix& m);

/// One Born-rule sample from a private generator seeded with `seed`.
ProtocolTranscript run_protocol(const CMatrix& psi, ProtocolVariant v, const CMatrix& m,
                                std::uint64_t seed);

struct ProtocolBatch {
  std::size_t samples = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> histogram;
  std::vector<double> probabilities;
  double min_fidelity = 1.0;
  /// max_a |count_a - N p_a| / sqrt(N p_a (1 - p_a)).
  double max_sigma = 0.0;
};

ProtocolBatch run_protocol_batch(const CMatrix& psi, ProtocolVariant v, const CMatrix& m,
                                 std::size_t samples, std::uint64_t seed);

/// Outcome table invariants (probabilities sum to 1 and equal 1/d^2, every
/// corrected fidelity is 1), a sampled batch within 5 sigma of uniform, and a
/// Schmidt-skewed resource whose worst outcome fidelity drops below 1.
Report protocol_check(ProtocolVariant v, int d, std::size_t samples, std::uint64_t seed,
                      double tol = kDefaultTol);

/// The equation on each computational basis input and on a random
/// superposition, plus linearity of both sides, a corrupted-correction
/// control and (n-qubit) a resource assembled from interleaved pairs by the
/// twist.
Report linearity_reduction_check(TeleportVariant v, int d, std::uint64_t seed,
                                 double tol = kDefaultTol);

}  // namespace bellkit
