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


#include <gtest/gtest.h>

#include <random>

#include "bellkit/circuit.hpp"
#include "oracle.hpp"

namespace bellkit {
namespace {

// Single-wire gate embedded with Kronecker products.
CMatrix on_wire(const CMatrix& g, std::size_t w, std::size_t n) {
  std::vector<CMatrix> fs(n, oracle::eye(2));
  fs[w] = g;
  return oracle::kron_all(fs);
}

// CNOT as a basis permutation: flip target bit when control bit is set.
CMatrix cnot_oracle(std::size_t c, std::size_t t, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  CMatrix m(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = x;
    if (oracle::bit(x, c, n)) y ^= std::size_t{1} << (n - 1 - t);
    m(y, x) = 1.0;
  }
  return m;
}

TEST(Circuit, MatrixMatchesGateProduct) {
  Circuit c(3);
  c.h(0).cnot(0, 2).x(1).z(2).swap(0, 1).cnot(2, 1);
  CMatrix want = oracle::eye(8);
  want = oracle::matmul(on_wire(oracle::H(), 0, 3), want);
  want = oracle::matmul(cnot_oracle(0, 2, 3), want);
  want = oracle::matmul(on_wire(oracle::X(), 1, 3), want);
  want = oracle::matmul(on_wire(oracle::Z(), 2, 3), want);
  // SWAP(0,1) on three wires as a basis permutation.
  CMatrix sw(8, 8);
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t y = (x & 1) | (std::size_t(oracle::bit(x, 0, 3)) << 1) |
                          (std::size_t(oracle::bit(x, 1, 3)) << 2);
    sw(y, x) = 1.0;
  }
  want = oracle::matmul(sw, want);
  want = oracle::matmul(cnot_oracle(2, 1, 3), want);
  EXPECT_LT(residual(c.to_matrix(), want), 1e-15);
  EXPECT_EQ(c.count(GateKind::CNOT), 2u);
  EXPECT_EQ(c.size(), 6u);
}

TEST(Circuit, ApplyAgreesWithMatrix) {
  std::mt19937_64 rng(3);
  Circuit c(4);
  for (int k = 0; k < 30; ++k) {
    const std::size_t a = rng() % 4, b = (a + 1 + rng() % 3) % 4;
    switch (rng() % 5) {
      case 0: c.h(a); break;
      case 1: c.x(a); break;
      case 2: c.z(a); break;
      case 3: c.cnot(a, b); break;
      default: c.swap(a, b); break;
    }
  }
  const CMatrix s = random_state(16, rng);
  EXPECT_LT(residual(c.apply(s), c.to_matrix() * s), 1e-13);
}

TEST(Circuit, Validation) {
  Circuit c(2);
  EXPECT_THROW(c.cnot(0, 0), ShapeError);
  EXPECT_THROW(c.h(2), ShapeError);
  EXPECT_THROW(c.add(GateKind::SWAP, {0}), ShapeError);
  EXPECT_THROW(Circuit(0), ShapeError);
}

TEST(Circuit, QasmRoundTrip) {
  Circuit c(3);
  c.h(0).cnot(0, 2).swap(1, 2).x(1).z(0);
  const std::string q = c.to_qasm();
  EXPECT_EQ(q.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n", 0), 0u);
  EXPECT_NE(q.find("cx q[0],q[2];"), std::string::npos);
  EXPECT_EQ(Circuit::from_qasm(q), c);
  EXPECT_EQ(Circuit::from_qasm("// note\n" + q + "// trailing\n"), c);
}

TEST(Circuit, QasmRejectsUnknownInput) {
  EXPECT_THROW(Circuit::from_qasm("OPENQASM 2.0;\nqreg q[2];\nccx q[0],q[1],q[0];\n"),
               DomainError);
  EXPECT_THROW(Circuit::from_qasm("qreg q[2];\nh q[5];\n"), std::exception);
  EXPECT_THROW(Circuit::from_qasm("OPENQASM 2.0;\nh q[0];\n"), DomainError);
}

}  // namespace
}  // namespace bellkit
