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

#include "bellkit/circuit.hpp"

#include <algorithm>
#include <numbers>
#include <regex>
#include <sstream>
#include <utility>

namespace bellkit {

std::size_t gate_arity(GateKind k) {
  return k == GateKind::CNOT || k == GateKind::SWAP ? 2 : 1;
}

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::SWAP:
      return "SWAP";
    case GateKind::X:
      return "X";
    case GateKind::Z:
      return "Z";
  }
  return "?";
}

std::string gate_qasm(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "h";
    case GateKind::CNOT:
      return "cx";
    case GateKind::SWAP:
      return "swap";
    case GateKind::X:
      return "x";
    case GateKind::Z:
      return "z";
  }
  return "?";
}

Circuit::Circuit(std::size_t wires) : wires_(wires) {
  if (wires == 0) throw ShapeError("circuit needs at least one wire");
  if (wires > 24) throw SizeLimitError("circuit wire count exceeds 24");
}

std::size_t Circuit::count(GateKind k) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [k](const GateOp& g) { return g.kind == k; }));
}

Circuit& Circuit::add(GateKind k, std::vector<std::size_t> wires) {
  if (wires.size() != gate_arity(k)) {
    throw ShapeError(gate_name(k) + " expects " + std::to_string(gate_arity(k)) + " wire(s)");
  }
  for (auto w : wires) {
    if (w >= wires_) {
      throw ShapeError(gate_name(k) + " wire " + std::to_string(w) + " out of range [0, " +
                       std::to_string(wires_) + ")");
    }
  }
  if (wires.size() == 2 && wires[0] == wires[1]) {
    throw ShapeError(gate_name(k) + " needs two distinct wires");
  }
  gates_.push_back(GateOp{k, std::move(wires)});
  return *this;
}

CMatrix Circuit::apply(const CMatrix& state) const {
  const std::size_t dim = std::size_t{1} << wires_;
  if (!state.is_column() || state.rows() != dim) {
    throw ShapeError("circuit on " + std::to_string(wires_) + " wires needs a " +
                     std::to_string(dim) + "-dim column");
  }
  const double s = 1.0 / std::numbers::sqrt2;
  CMatrix v = state;
  auto mask = [this](std::size_t w) { return std::size_t{1} << (wires_ - 1 - w); };
  for (const auto& g : gates_) {
    const std::size_t m0 = mask(g.wires[0]);
    switch (g.kind) {
      case GateKind::H:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & m0) continue;
          const cplx a = v[i], b = v[i | m0];
          v[i] = s * (a + b);
          v[i | m0] = s * (a - b);
        }
        break;
      case GateKind::X:
        for (std::size_t i = 0; i < dim; ++i) {
          if (!(i & m0)) std::swap(v[i], v[i | m0]);
        }
        break;
      case GateKind::Z:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & m0) v[i] = -v[i];
        }
        break;
      case GateKind::CNOT: {
        const std::size_t m1 = mask(g.wires[1]);
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & m0) && !(i & m1)) std::swap(v[i], v[i | m1]);
        }
        break;
      }
      case GateKind::SWAP: {
        const std::size_t m1 = mask(g.wires[1]);
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & m0) && !(i & m1)) std::swap(v[i], v[(i & ~m0) | m1]);
        }
        break;
      }
    }
  }
  return v;
}

CMatrix Circuit::to_matrix() const {
  if (wires_ > kMaxCircuitMatrixWires) {
    throw SizeLimitError("to_matrix supports at most 10 wires");
  }
  const std::size_t dim = std::size_t{1} << wires_;
  CMatrix u(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const CMatrix col = apply(CMatrix::basis_ket(dim, c));
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = col[r];
  }
  return u;
}

std::string Circuit::to_qasm() const {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << wires_ << "];\n";
  for (const auto& g : gates_) {
    os << gate_qasm(g.kind) << " ";
    for (std::size_t i = 0; i < g.wires.size(); ++i) {
      if (i) os << ",";
      os << "q[" << g.wires[i] << "]";
    }
    os << ";\n";
  }
  return os.str();
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

GateKind kind_from_qasm(const std::string& name) {
  for (GateKind k : {GateKind::H, GateKind::CNOT, GateKind::SWAP, GateKind::X, GateKind::Z}) {
    if (gate_qasm(k) == name) return k;
  }
  throw DomainError("unsupported OpenQASM gate: " + name);
}

}  // namespace

Circuit Circuit::from_qasm(std::string_view text) {
  std::vector<std::string> stmts;
  {
    std::string cleaned;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      const auto c = line.find("//");
      if (c != std::string::npos) line.resize(c);
      cleaned += line + "\n";
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i < cleaned.size(); ++i) {
      if (cleaned[i] == ';') {
        stmts.push_back(trim(cleaned.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (!trim(cleaned.substr(start)).empty()) throw DomainError("trailing text without ';'");
  }
  if (stmts.size() < 3 || stmts[0] != "OPENQASM 2.0" || stmts[1] != "include \"qelib1.inc\"") {
    throw DomainError("expected OPENQASM 2.0 header and qelib1.inc include");
  }
  static const std::regex qreg_re(R"(qreg\s+q\[(\d+)\])");
  static const std::regex gate_re(R"(([a-z]+)\s+q\[(\d+)\](?:\s*,\s*q\[(\d+)\])?)");
  std::smatch m;
  if (!std::regex_match(stmts[2], m, qreg_re)) throw DomainError("expected 'qreg q[N]'");
  Circuit c(std::stoul(m[1].str()));
  for (std::size_t i = 3; i < stmts.size(); ++i) {
    if (stmts[i].empty()) continue;
    if (!std::regex_match(stmts[i], m, gate_re)) {
      throw DomainError("cannot parse statement: " + stmts[i]);
    }
    std::vector<std::size_t> wires{std::stoul(m[2].str())};
    if (m[3].matched) wires.push_back(std::stoul(m[3].str()));
    try {
      c.add(kind_from_qasm(m[1].str()), std::move(wires));
    } catch (const ShapeError& e) {
      throw DomainError(std::string("bad gate in OpenQASM: ") + e.what());
    }
  }
  return c;
}

}  // namespace bellkit
