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


// Reference implementations used by the tests. Each one is written from the
// defining formula with plain index loops and shares no code with the
// library kernels it is compared against.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "bellkit/linalg.hpp"

namespace oracle {

using bellkit::CMatrix;
using bellkit::cplx;

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline CMatrix kron_all(const std::vector<CMatrix>& fs) {
  CMatrix out = fs.at(0);
  for (std::size_t i = 1; i < fs.size(); ++i) out = kron(out, fs[i]);
  return out;
}

inline CMatrix eye(std::size_t n) {
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

inline CMatrix adj(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline double maxdiff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline CMatrix X() { return CMatrix{{0, 1}, {1, 0}}; }
inline CMatrix Z() { return CMatrix{{1, 0}, {0, -1}}; }
inline CMatrix H() {
  const double s = 1.0 / std::sqrt(2.0);
  return CMatrix{{s, s}, {s, -s}};
}

/// Z^alpha X^beta for one qubit, from the 2x2 matrices above.
inline CMatrix t_gate(int alpha, int beta) {
  CMatrix u = eye(2);
  if (alpha) u = matmul(u, Z());
  if (beta) u = matmul(u, X());
  return u;
}

/// omega^{i} on the diagonal and |i> -> |i+1 mod d>.
inline CMatrix clock(int d) {
  CMatrix z(d, d);
  for (int i = 0; i < d; ++i) z(i, i) = std::polar(1.0, 2.0 * M_PI * i / d);
  return z;
}
inline CMatrix shift(int d) {
  CMatrix x(d, d);
  for (int i = 0; i < d; ++i) x((i + 1) % d, i) = 1.0;
  return x;
}

inline CMatrix mpow(const CMatrix& a, int k) {
  CMatrix out = eye(a.rows());
  for (int i = 0; i < k; ++i) out = matmul(out, a);
  return out;
}

/// (op (x) 1)|Omega_d> with |Omega_d> = sum_i |ii>/sqrt d.
inline CMatrix bell_of(const CMatrix& op) {
  const std::size_t d = op.rows();
  CMatrix om(d * d, 1);
  for (std::size_t i = 0; i < d; ++i) om[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
  return matmul(kron(op, eye(d)), om);
}

/// Bit q (0 = most significant) of x on `wires` wires.
inline int bit(std::size_t x, std::size_t q, std::size_t wires) {
  return static_cast<int>((x >> (wires - 1 - q)) & 1U);
}

/// The twist on 2n qubits as an explicit relabelling of basis kets:
/// |i1 j1 ... in jn> -> |i1 ... in j1 ... jn>.
inline CMatrix twist_matrix(std::size_t n) {
  const std::size_t w = 2 * n, dim = std::size_t{1} << w;
  CMatrix t(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t is = 0, js = 0;
    for (std::size_t k = 0; k < n; ++k) {
      is = (is << 1) | bit(x, 2 * k, w);
      js = (js << 1) | bit(x, 2 * k + 1, w);
    }
    t((is << n) | js, x) = 1.0;
  }
  return t;
}

inline CMatrix random_ket(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix v(dim, 1);
  double nn = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = cplx{g(rng), g(rng)};
    nn += std::norm(v[i]);
  }
  for (std::size_t i = 0; i < dim; ++i) v[i] /= std::sqrt(nn);
  return v;
}

}  // namespace oracle
