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

#include "bellkit/bell.hpp"
#include "bellkit/braid.hpp"
#include "oracle.hpp"

namespace bellkit {
namespace {

using oracle::kron;
using oracle::matmul;

const std::vector<BellTransformParams> kPairs = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

CMatrix b_oracle(int e, int h) {
  const double s = 1.0 / std::sqrt(2.0);
  return CMatrix{{s, 0, 0, h * s}, {0, s, e * s, 0}, {0, -e * s, s, 0}, {-h * s, 0, 0, s}};
}

CMatrix phi(int a, int b) { return oracle::bell_of(oracle::t_gate(a, b)); }

TEST(BellTransform, MatrixAndInverse) {
  for (auto p : kPairs) {
    const CMatrix b = bell_transform(p);
    EXPECT_EQ(residual(b, b_oracle(p.epsilon, p.eta)), 0.0);
    EXPECT_LT(residual(matmul(oracle::adj(b), b), oracle::eye(4)), 1e-15);
    EXPECT_LT(residual(oracle::adj(b), bell_transform(p.inverse())), 1e-15);
  }
  EXPECT_THROW(bell_transform({0, 1}), DomainError);
}

TEST(BellTransform, WorkedActions) {
  // B(1,1)|ij> = |phi(i xor 1, i xor j)>.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const CMatrix ket = CMatrix::basis_ket(4, 2 * i + j);
      EXPECT_LT(residual(bell_transform({1, 1}) * ket, phi(i ^ 1, i ^ j)), 1e-15);
      // B(-1,-1)|ij> = (-1)^i |phi(i, i xor j)>.
      CMatrix want = phi(i, i ^ j);
      if (i) want *= -1.0;
      EXPECT_LT(residual(bell_transform({-1, -1}) * ket, want), 1e-15);
    }
}

TEST(BellTransform, SignExponentTable) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      EXPECT_EQ(sign_exponent({1, 1}, i, j), 0);
      EXPECT_EQ(sign_exponent({1, -1}, i, j), i * j);
      EXPECT_EQ(sign_exponent({-1, 1}, i, j), i * (1 - j));
      EXPECT_EQ(sign_exponent({-1, -1}, i, j), i);
    }
}

TEST(BellTransform, UnifiedActionFromOracle) {
  // (-1)^f B|ij> = |phi(i', j')> with i' = i xor (|e-h|/2) j' xor (1+h)/2, j' = i xor j.
  for (auto p : kPairs) {
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const int jp = i ^ j;
        const int ip = i ^ ((std::abs(p.epsilon - p.eta) / 2) * jp) ^ ((1 + p.eta) / 2);
        EXPECT_EQ(primed_bits(p, i, j), std::make_pair(ip, jp));
        CMatrix lhs = b_oracle(p.epsilon, p.eta) * CMatrix::basis_ket(4, 2 * i + j);
        if (sign_exponent(p, i, j)) lhs *= -1.0;
        EXPECT_LT(residual(lhs, phi(ip, jp)), 1e-15);
        seen.insert({ip, jp});
      }
    EXPECT_EQ(seen.size(), 4u);
    EXPECT_TRUE(bell_action_check(p).pass());
  }
}

double ybe_oracle(const CMatrix& r, std::size_t d) {
  const CMatrix id = oracle::eye(d);
  const CMatrix r12 = kron(r, id), r23 = kron(id, r);
  return oracle::maxdiff(matmul(matmul(r12, r23), r12), matmul(matmul(r23, r12), r23));
}

TEST(YangBaxter, BellTransformsSwapAndCnot) {
  for (auto p : kPairs) {
    EXPECT_LT(ybe_oracle(b_oracle(p.epsilon, p.eta), 2), 1e-12);
    EXPECT_TRUE(yang_baxter_check(bell_transform(p), 2).pass());
  }
  for (std::size_t d : {2u, 3u}) EXPECT_TRUE(yang_baxter_check(swap_gate(d), d).pass());
  const Report c = yang_baxter_check(cnot_gate(), 2);
  EXPECT_FALSE(c.pass());
  EXPECT_GE(c.max_residual(), 0.5);
  EXPECT_GE(ybe_oracle(cnot_gate(), 2), 0.5);
  EXPECT_THROW(yang_baxter_check(cnot_gate(), 3), ShapeError);
}

TEST(YangBaxter, LocalBasisChangeKeepsSolutions) {
  std::mt19937_64 rng(61);
  for (auto p : kPairs) {
    for (int t = 0; t < 5; ++t) {
      const CMatrix v = haar_unitary(2, rng);
      const CMatrix vv = kron(v, v);
      const CMatrix r = vv * bell_transform(p) * dagger(vv);
      EXPECT_TRUE(yang_baxter_check(r, 2).pass());
    }
  }
}

TEST(Braid, RelationsForBellTransforms) {
  for (auto p : kPairs) {
    for (std::size_t n : {3u, 4u, 5u}) {
      const Report r = braid_rep_check(n, p);
      EXPECT_TRUE(r.pass()) << to_text(r);
      EXPECT_EQ(r.find("far-commutation") != nullptr, n >= 4);
    }
  }
  // b_1 and b_3 on four strands, by hand.
  const CMatrix b = bell_transform({1, -1});
  const CMatrix b1 = kron(b, oracle::eye(4)), b3 = kron(oracle::eye(4), b);
  EXPECT_LT(residual(b1 * b3, b3 * b1), 1e-15);
}

TEST(Braid, CnotBreaksBraidRelation) {
  const Report r = braid_rep_check(3, cnot_gate());
  ASSERT_NE(r.find("braid-relation"), nullptr);
  EXPECT_FALSE(r.find("braid-relation")->pass);
  EXPECT_THROW(braid_rep_check(2, cnot_gate()), DomainError);
}

CMatrix projector(const CMatrix& v) {
  CMatrix p = matmul(v, oracle::adj(v));
  p *= 1.0 / std::real(matmul(oracle::adj(v), v)(0, 0));
  return p;
}

TEST(TemperleyLieb, GeneratorsAreEmbeddedProjectors) {
  const TLRep rep = tl_generators(2, 2, 0, 0);
  ASSERT_EQ(rep.generators.size(), 1u);
  EXPECT_LT(residual(rep.generators[0], projector(phi(0, 0))), 1e-15);
  const TLRep r3 = tl_generators(3, 3, 1, 2);
  const CMatrix u = matmul(oracle::clock(3), oracle::mpow(oracle::shift(3), 2));
  const CMatrix e = projector(oracle::bell_of(u));
  EXPECT_LT(residual(r3.generators[0], kron(e, oracle::eye(3))), 1e-14);
  EXPECT_LT(residual(r3.generators[1], kron(oracle::eye(3), e)), 1e-14);
}

TEST(TemperleyLieb, RelationsForAllLabels) {
  for (int d : {2, 3}) {
    for (std::size_t n : {2u, 3u, 4u}) {
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const Report r = tl_relation_check(tl_generators(n, d, a, b));
          EXPECT_TRUE(r.pass()) << to_text(r);
        }
    }
  }
}

TEST(TemperleyLieb, LoopFactorIsOneOverDSquared) {
  const TLRep rep = tl_generators(3, 3, 0, 0);
  const auto& e = rep.generators;
  EXPECT_LT(residual(e[0] * e[1] * e[0], (1.0 / 9.0) * e[0]), 1e-14);
  EXPECT_GT(residual(e[0] * e[1] * e[0], 0.25 * e[0]), 1e-3);
}

TEST(TemperleyLieb, UnitaryExtensionsKeepRelations) {
  std::mt19937_64 rng(62);
  for (int d : {2, 3}) {
    for (int t = 0; t < 10; ++t) {
      const CMatrix m = haar_unitary(d, rng);
      for (Side side : {Side::Left, Side::Right}) {
        const Report r = tl_relation_check(tl_generators(4, d, t % d, (t / 2) % d, m, side));
        EXPECT_TRUE(r.pass()) << to_text(r);
      }
    }
  }
}

TEST(TemperleyLieb, NonUnitaryControlBreaksRelation) {
  for (int d : {2, 3}) {
    std::vector<cplx> diag;
    for (int i = 0; i < d; ++i) diag.push_back(i + 1.0);
    const Report r = tl_relation_check(tl_generators(4, d, 0, 0, CMatrix::diagonal(diag)));
    ASSERT_NE(r.find("relation"), nullptr);
    EXPECT_GT(r.find("relation")->residual, 1e-6);
    EXPECT_LT(r.find("idempotent")->residual, 1e-12);
  }
}

// Closed forms of the correction exponents for right = (-eps_l, -eta_l).
AbcExponents table_by_hand(int el, int hl, int i, int j, int k, int m) {
  AbcExponents e;
  e.b = i ^ j ^ k ^ m;
  if (el == -1 && hl == 1) {
    e.a = (i * j) ^ ((1 - m) * (i ^ j ^ k));
    e.c = j ^ m ^ 1;
  } else if (el == 1 && hl == -1) {
    e.a = (i * (1 - j)) ^ (m * (i ^ j ^ k));
    e.c = j ^ m ^ 1;
  } else if (el == 1 && hl == 1) {
    e.a = i ^ ((1 - k) * (i ^ j));
    e.c = i ^ k ^ 1;
  } else {
    e.a = k * (1 - (i ^ j));
    e.c = i ^ k ^ 1;
  }
  return e;
}

TEST(BraidTeleport, TableRowsExhaustive) {
  int checked = 0;
  for (auto p : kPairs) {
    for (int bits = 0; bits < 16; ++bits) {
      const int i = bits >> 3 & 1, j = bits >> 2 & 1, k = bits >> 1 & 1, m = bits & 1;
      const auto general = correction_exponents(p, p.inverse(), i, j, k, m);
      EXPECT_EQ(general, table_by_hand(p.epsilon, p.eta, i, j, k, m));
      EXPECT_EQ(correction_table_exponents(p, i, j, k, m), general);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 64);
  EXPECT_TRUE(correction_table_check().pass());
}

TEST(BraidTeleport, AbcGate) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        CMatrix want = matmul(oracle::mpow(oracle::X(), b), oracle::mpow(oracle::Z(), c));
        if (a) want *= -1.0;
        EXPECT_EQ(residual(abc_gate({a, b, c}), want), 0.0);
      }
}

TEST(BraidTeleport, SingleQubitAllSignsAgainstOracle) {
  std::mt19937_64 rng(63);
  for (auto l : kPairs) {
    for (auto r : kPairs) {
      for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
          const CMatrix psi = oracle::random_ket(2, rng);
          const CMatrix lhs =
              matmul(kron(b_oracle(-r.epsilon, -r.eta), oracle::eye(2)),
                     matmul(kron(oracle::eye(2), b_oracle(l.epsilon, l.eta)),
                            kron(psi, CMatrix::basis_ket(4, 2 * k + m))));
          CMatrix rhs(8, 1);
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              const auto e = correction_exponents(l, r, i, j, k, m);
              rhs += kron(CMatrix::basis_ket(4, 2 * i + j), abc_gate(e) * psi);
            }
          rhs *= 0.5;
          EXPECT_LT(residual(lhs, rhs), 1e-12);
          const Report rep = braid_teleport_single_check(l, r, k, m, psi);
          EXPECT_TRUE(rep.pass()) << to_text(rep);
        }
      }
    }
  }
}

TEST(BraidTeleport, WorkedSpecializations) {
  // B(-1,1) on the left, k = m = 1, and B(-1,1) again on the right:
  // correction (-1)^{ij} T^dag(j, i xor j).
  const BellTransformParams left{-1, 1}, right{1, -1};
  EXPECT_EQ(residual(bell_transform(right.inverse()), bell_transform(left)), 0.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CMatrix want = oracle::adj(oracle::t_gate(j, i ^ j));
      if (i & j) want *= -1.0;
      EXPECT_EQ(residual(abc_gate(correction_exponents(left, right, i, j, 1, 1)), want), 0.0);
    }
  const Report r = braid_worked_examples_check(3);
  EXPECT_TRUE(r.pass()) << to_text(r);
}

TEST(BraidTeleport, ZeroResourceForcesKM) {
  for (auto p : kPairs) {
    int hits = 0;
    for (int k = 0; k < 2; ++k)
      for (int m = 0; m < 2; ++m)
        if (primed_bits(p, k, m) == std::make_pair(0, 0)) {
          ++hits;
          EXPECT_EQ(k, (1 + p.eta) / 2);
          EXPECT_EQ(m, k);
        }
    EXPECT_EQ(hits, 1);
  }
}

TEST(TwistedGates, OnePairIsTheBellTransform) {
  for (auto p : kPairs) {
    const BitString e(p.epsilon == 1 ? "1" : "0"), h(p.eta == 1 ? "1" : "0");
    EXPECT_EQ(residual(twisted_yb_gate(e, h, TwistKind::Plain), bell_transform(p)), 0.0);
    EXPECT_EQ(residual(twisted_yb_gate(e, h, TwistKind::Conjugated), bell_transform(p)), 0.0);
  }
  const int signs[3] = {1, -1, 1};
  EXPECT_EQ(sign_string(signs).str(), "101");
}

TEST(TwistedGates, ConjugatedSolvesYbePlainDoesNot) {
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      const BitString e = BitString::from_index(x, 2), h = BitString::from_index(y, 2);
      const CMatrix conj = twisted_yb_gate(e, h, TwistKind::Conjugated);
      const CMatrix plain = twisted_yb_gate(e, h, TwistKind::Plain);
      EXPECT_LT(ybe_oracle(conj, 4), 1e-12);
      EXPECT_GT(ybe_oracle(plain, 4), 1e-6);
      EXPECT_TRUE(yang_baxter_check(conj, 4).pass());
      EXPECT_FALSE(yang_baxter_check(plain, 4).pass());
    }
}

// (1/2^n) sum |alpha beta> (x) U psi with the interleaved label order.
TEST(BraidTeleport, MultiQubitAllLabelsAgainstOracle) {
  std::mt19937_64 rng(64);
  const BitString el("01"), hl("11"), er("10"), hr("00");
  const CMatrix psi = oracle::random_ket(4, rng);
  const CMatrix gl = oracle::matmul(oracle::twist_matrix(2),
                                    kron(b_oracle(-1, 1), b_oracle(1, 1)));
  const CMatrix gr = oracle::matmul(oracle::twist_matrix(2),
                                    kron(b_oracle(1, -1), b_oracle(-1, -1)));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      const BitString a = BitString::from_index(x, 2), b = BitString::from_index(y, 2);
      const std::size_t ab = (a[0] << 3) | (b[0] << 2) | (a[1] << 1) | b[1];
      const CMatrix lhs = matmul(kron(oracle::adj(gr), oracle::eye(4)),
                                 matmul(kron(oracle::eye(4), gl),
                                        kron(psi, CMatrix::basis_ket(16, ab))));
      CMatrix rhs(64, 1);
      for (std::size_t idx = 0; idx < 16; ++idx) {
        const BitString al = BitString::from_index(idx >> 2, 2);
        const BitString be = BitString::from_index(idx & 3, 2);
        const std::size_t lab = (al[0] << 3) | (be[0] << 2) | (al[1] << 1) | be[1];
        rhs += kron(CMatrix::basis_ket(16, lab),
                    braid_correction(el, hl, er, hr, a, b, al, be) * psi);
      }
      rhs *= 0.25;
      EXPECT_LT(residual(lhs, rhs), 1e-12);
      for (auto kind : {TwistKind::Plain, TwistKind::Conjugated}) {
        EXPECT_TRUE(braid_teleport_multi_check(el, hl, er, hr, a, b, kind, psi).pass());
      }
    }
}

TEST(BraidTeleport, MultiQubitRandomSigns) {
  std::mt19937_64 rng(65);
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    for (int t = 0; t < 6; ++t) {
      auto bits = [&] { return BitString::from_index(rng() % dim, n); };
      const BitString el = bits(), hl = bits(), er = bits(), hr = bits(), a = bits(), b = bits();
      const CMatrix psi = random_state(dim, rng);
      for (auto kind : {TwistKind::Plain, TwistKind::Conjugated}) {
        const Report r = braid_teleport_multi_check(el, hl, er, hr, a, b, kind, psi);
        EXPECT_TRUE(r.pass()) << to_text(r);
      }
    }
  }
}

TEST(BraidTeleport, OnePairMatchesSingleQubitCheck) {
  std::mt19937_64 rng(66);
  const CMatrix psi = random_state(2, rng);
  for (auto l : kPairs)
    for (auto r : kPairs) {
      const BitString el(l.epsilon == 1 ? "1" : "0"), hl(l.eta == 1 ? "1" : "0");
      const BitString er(r.epsilon == 1 ? "1" : "0"), hr(r.eta == 1 ? "1" : "0");
      for (int k = 0; k < 2; ++k)
        for (int m = 0; m < 2; ++m) {
          const BitString a(k ? "1" : "0"), b(m ? "1" : "0");
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              const BitString al(i ? "1" : "0"), be(j ? "1" : "0");
              EXPECT_EQ(residual(braid_correction(el, hl, er, hr, a, b, al, be),
                                 abc_gate(correction_exponents(l, r, i, j, k, m))),
                        0.0);
            }
        }
    }
}

}  // namespace
}  // namespace bellkit
