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
#include <string_view>
#include <vector>

#include "bellkit/linalg.hpp"

namespace bellkit {

enum class GateKind { H, CNOT, SWAP, X, Z };

/// Number of wires a gate of this kind acts on.
std::size_t gate_arity(GateKind k);
/// Upper-case display name ("H", "CNOT", ...).
std::string gate_name(GateKind k);
/// OpenQASM mnemonic ("h", "cx", ...).
std::string gate_qasm(GateKind k);

struct GateOp {
  GateKind kind;
  /// For CNOT: control first, then target.
  std::vector<std::size_t> wires;

  bool operator==(const GateOp&) const = default;
};

/// Largest wire count for which to_matrix will build a dense unitary.
inline constexpr std::size_t kMaxCircuitMatrixWires = 10;

/// Ordered list of qubit gates. Gates are applied in insertion order, so the
/// first gate added is the rightmost factor of to_matrix().
class Circuit {
 public:
  explicit Circuit(std::size_t wires);

  std::size_t wires() const { return wires_; }
  const std::vector<GateOp>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  std::size_t count(GateKind k) const;

  /// Throws ShapeError on out-of-range or repeated wires.
  Circuit& add(GateKind k, std::vector<std::size_t> wires);
  Circuit& h(std::size_t w) { return add(GateKind::H, {w}); }
  Circuit& x(std::size_t w) { return add(GateKind::X, {w}); }
  Circuit& z(std::size_t w) { return add(GateKind::Z, {w}); }
  Circuit& cnot(std::size_t control, std::size_t target) {
    return add(GateKind::CNOT, {control, target});
  }
  Circuit& swap(std::size_t a, std::size_t b) { return add(GateKind::SWAP, {a, b}); }

  /// Applies every gate to a 2^wires column vector.
  CMatrix apply(const CMatrix& state) const;
  /// Dense unitary of the whole circuit.
  CMatrix to_matrix() const;

  /// OpenQASM 2.0 text with one qreg named q; gate order is insertion order.
  std::string to_qasm() const;
  /// Parses the subset of OpenQASM 2.0 produced by to_qasm(). Throws
  /// DomainError on anything else.
  static Circuit from_qasm(std::string_view text);

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t wires_;
  std::vector<GateOp> gates_;
};

}  // namespace bellkit
