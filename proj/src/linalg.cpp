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

#include "bellkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace bellkit {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw ShapeError("matrix dimensions must be positive");
  }
  if (rows > kMaxAxis || cols > kMaxAxis) {
    throw SizeLimitError("matrix axis exceeds 2^24: " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  if (rows > kMaxEntries / cols) {
    throw SizeLimitError("matrix entry count exceeds limit: " + std::to_string(rows) +
                         "x" + std::to_string(cols));
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                     "x" + std::to_string(b.cols()));
  }
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

double standard_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  data_.assign(rows * cols, cplx{0.0, 0.0});
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_dims(rows, cols);
  if (data_.size() != rows * cols) {
    throw ShapeError("entry count " + std::to_string(data_.size()) +
                     " does not match " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  check_dims(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged initializer list");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

CMatrix CMatrix::column(std::vector<cplx> entries) {
  const std::size_t n = entries.size();
  return CMatrix(n, 1, std::move(entries));
}

CMatrix CMatrix::basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DomainError("basis index out of range");
  CMatrix k(dim, 1);
  k[index] = 1.0;
  return k;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

double CMatrix::norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mul(a, b); }

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  const std::size_t ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  if (rb > kMaxAxis / ra || cb > kMaxAxis / ca) {
    throw SizeLimitError("tensor product exceeds 2^24 per axis");
  }
  CMatrix out(ra * rb, ca * cb);
  for (std::size_t ia = 0; ia < ra; ++ia) {
    for (std::size_t ja = 0; ja < ca; ++ja) {
      const cplx s = a(ia, ja);
      if (s == cplx{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < rb; ++ib) {
        for (std::size_t jb = 0; jb < cb; ++jb) {
          out(ia * rb + ib, ja * cb + jb) = s * b(ib, jb);
        }
      }
    }
  }
  return out;
}

CMatrix tensor_all(std::span<const CMatrix> factors) {
  if (factors.empty()) return CMatrix::identity(1);
  CMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

CMatrix tensor_power(const CMatrix& a, std::size_t k) {
  CMatrix out = CMatrix::identity(1);
  for (std::size_t i = 0; i < k; ++i) out = tensor(out, a);
  return out;
}

CMatrix dagger(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

CMatrix conj(const CMatrix& a) {
  CMatrix out = a;
  for (auto& z : out.entries()) z = std::conj(z);
  return out;
}

CMatrix mul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + ")");
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx s = a(i, k);
      if (s == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += s * b(k, j);
    }
  }
  return out;
}

CMatrix matrix_power(const CMatrix& a, unsigned k) {
  if (!a.is_square()) throw ShapeError("matrix_power: non-square");
  CMatrix out = CMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

cplx trace(const CMatrix& a) {
  if (!a.is_square()) throw ShapeError("trace: non-square matrix");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

cplx hs_inner(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  if (!a.is_square()) throw ShapeError("hs_inner: non-square matrices");
  cplx s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += std::conj(ea[i]) * eb[i];
  return s / static_cast<double>(a.rows());
}

cplx inner(const CMatrix& a, const CMatrix& b) {
  if (!a.is_column() || !b.is_column() || a.rows() != b.rows()) {
    throw ShapeError("inner: expects column vectors of equal length");
  }
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

CMatrix outer(const CMatrix& ket, const CMatrix& bra) {
  if (!ket.is_column() || !bra.is_column()) throw ShapeError("outer: expects columns");
  CMatrix out(ket.rows(), bra.rows());
  for (std::size_t r = 0; r < ket.rows(); ++r) {
    for (std::size_t c = 0; c < bra.rows(); ++c) out(r, c) = ket[r] * std::conj(bra[c]);
  }
  return out;
}

double residual(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "residual");
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double unitarity_residual(const CMatrix& a) {
  if (!a.is_square()) throw ShapeError("unitarity_residual: non-square");
  return residual(mul(dagger(a), a), CMatrix::identity(a.rows()));
}

bool is_unitary(const CMatrix& a, double tol) {
  return a.is_square() && unitarity_residual(a) < tol;
}

bool is_hermitian(const CMatrix& a, double tol) {
  return a.is_square() && residual(a, dagger(a)) < tol;
}

double spectral_norm(const CMatrix& a) {
  const CMatrix g = mul(dagger(a), a);
  const std::size_t n = g.rows();
  // Fixed, generic start vector keeps the result deterministic.
  CMatrix v(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = cplx{1.0 / static_cast<double>(i + 1), 0.5 / static_cast<double>(i + 2)};
  }
  double lambda = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const double nv = v.norm();
    if (nv == 0.0) return 0.0;
    v *= 1.0 / nv;
    CMatrix w = mul(g, v);
    const double next = std::abs(inner(v, w));
    v = std::move(w);
    if (std::abs(next - lambda) <= 1e-15 * std::max(1.0, next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

CMatrix permutation_matrix(std::span<const std::size_t> perm, std::size_t local_dim) {
  const std::size_t k = perm.size();
  if (k == 0) throw DomainError("permutation_matrix: empty permutation");
  if (local_dim < 1) throw DomainError("permutation_matrix: local_dim must be positive");
  std::vector<bool> seen(k, false);
  for (auto p : perm) {
    if (p >= k || seen[p]) throw DomainError("permutation_matrix: not a bijection");
    seen[p] = true;
  }
  const std::size_t dim = ipow(local_dim, k);
  CMatrix out(dim, dim);
  std::vector<std::size_t> s(k), t(k);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    for (std::size_t q = k; q-- > 0;) {
      s[q] = rest % local_dim;
      rest /= local_dim;
    }
    for (std::size_t q = 0; q < k; ++q) t[perm[q]] = s[q];
    std::size_t target = 0;
    for (std::size_t q = 0; q < k; ++q) target = target * local_dim + t[q];
    out(target, idx) = 1.0;
  }
  return out;
}

CMatrix apply_on_wires(const CMatrix& op, std::span<const std::size_t> wires,
                       const CMatrix& state, std::size_t num_wires, std::size_t local_dim) {
  const std::size_t k = wires.size();
  const std::size_t sub = ipow(local_dim, k);
  const std::size_t dim = ipow(local_dim, num_wires);
  if (!op.is_square() || op.rows() != sub) throw ShapeError("apply_on_wires: operator size");
  if (!state.is_column() || state.rows() != dim) {
    throw ShapeError("apply_on_wires: state size");
  }
  std::vector<std::size_t> stride(k);
  std::vector<bool> used(num_wires, false);
  for (std::size_t q = 0; q < k; ++q) {
    if (wires[q] >= num_wires || used[wires[q]]) {
      throw DomainError("apply_on_wires: bad wire list");
    }
    used[wires[q]] = true;
    stride[q] = ipow(local_dim, num_wires - 1 - wires[q]);
  }
  // offsets[s] = index contribution of sub-digit string s on the target wires.
  std::vector<std::size_t> offsets(sub);
  for (std::size_t s = 0; s < sub; ++s) {
    std::size_t rest = s, off = 0;
    for (std::size_t q = k; q-- > 0;) {
      off += (rest % local_dim) * stride[q];
      rest /= local_dim;
    }
    offsets[s] = off;
  }
  CMatrix out(dim, 1);
  std::vector<cplx> buf(sub);
  for (std::size_t base = 0; base < dim; ++base) {
    bool is_base = true;
    for (std::size_t q = 0; q < k && is_base; ++q) {
      if ((base / stride[q]) % local_dim != 0) is_base = false;
    }
    if (!is_base) continue;
    for (std::size_t s = 0; s < sub; ++s) buf[s] = state[base + offsets[s]];
    for (std::size_t r = 0; r < sub; ++r) {
      cplx acc = 0.0;
      for (std::size_t c = 0; c < sub; ++c) acc += op(r, c) * buf[c];
      out[base + offsets[r]] = acc;
    }
  }
  return out;
}

CMatrix apply_left(const CMatrix& op, const CMatrix& state, std::size_t right_dim) {
  if (!op.is_square() || !state.is_column() || state.rows() != op.cols() * right_dim) {
    throw ShapeError("apply_left: dimension mismatch");
  }
  const std::size_t left = op.rows();
  CMatrix out(state.rows(), 1);
  for (std::size_t r = 0; r < left; ++r) {
    for (std::size_t c = 0; c < left; ++c) {
      const cplx s = op(r, c);
      if (s == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < right_dim; ++j) out[r * right_dim + j] += s * state[c * right_dim + j];
    }
  }
  return out;
}

CMatrix apply_right(const CMatrix& op, const CMatrix& state, std::size_t left_dim) {
  if (!op.is_square() || !state.is_column() || state.rows() != op.cols() * left_dim) {
    throw ShapeError("apply_right: dimension mismatch");
  }
  const std::size_t right = op.rows();
  CMatrix out(state.rows(), 1);
  for (std::size_t i = 0; i < left_dim; ++i) {
    for (std::size_t r = 0; r < right; ++r) {
      cplx acc = 0.0;
      for (std::size_t c = 0; c < right; ++c) acc += op(r, c) * state[i * right + c];
      out[i * right + r] = acc;
    }
  }
  return out;
}

CMatrix contract_left(const CMatrix& bra, const CMatrix& state) {
  if (!bra.is_column() || !state.is_column() || state.rows() % bra.rows() != 0) {
    throw ShapeError("contract_left: dimension mismatch");
  }
  const std::size_t right = state.rows() / bra.rows();
  CMatrix out(right, 1);
  for (std::size_t i = 0; i < bra.rows(); ++i) {
    const cplx b = std::conj(bra[i]);
    if (b == cplx{0.0, 0.0}) continue;
    for (std::size_t j = 0; j < right; ++j) out[j] += b * state[i * right + j];
  }
  return out;
}

namespace {

// Row-reduces `a` (with optional augmented columns in `b`) in place and
// returns the pivot columns.
std::vector<std::size_t> row_reduce(CMatrix& a, CMatrix* b, double pivot_tol) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t best = row;
    double best_abs = std::abs(a(row, col));
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      if (std::abs(a(r, col)) > best_abs) {
        best = r;
        best_abs = std::abs(a(r, col));
      }
    }
    if (best_abs <= pivot_tol) continue;
    if (best != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(best, c));
      if (b) {
        for (std::size_t c = 0; c < b->cols(); ++c) std::swap((*b)(row, c), (*b)(best, c));
      }
    }
    const cplx p = a(row, col);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const cplx f = a(r, col) / p;
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
      if (b) {
        for (std::size_t c = 0; c < b->cols(); ++c) (*b)(r, c) -= f * (*b)(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const CMatrix& a, double pivot_tol) {
  CMatrix work = a;
  return row_reduce(work, nullptr, pivot_tol).size();
}

CMatrix solve(const CMatrix& a, const CMatrix& b, double pivot_tol) {
  if (!a.is_square() || b.rows() != a.rows()) throw ShapeError("solve: dimension mismatch");
  CMatrix work = a;
  CMatrix rhs = b;
  const auto pivots = row_reduce(work, &rhs, pivot_tol);
  if (pivots.size() != a.rows()) {
    throw DomainError("solve: singular system (rank " + std::to_string(pivots.size()) +
                      " < " + std::to_string(a.rows()) + ")");
  }
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const cplx p = work(r, r);
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) /= p;
  }
  return rhs;
}

CMatrix random_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  CMatrix g(rows, cols);
  for (auto& z : g.entries()) {
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    z = cplx{re, im} / std::sqrt(2.0);
  }
  return g;
}

CMatrix haar_unitary(std::size_t d, std::mt19937_64& rng) {
  CMatrix q = random_gaussian(d, d, rng);
  // Modified Gram-Schmidt on columns; R's diagonal comes out positive real.
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      cplx proj = 0.0;
      for (std::size_t r = 0; r < d; ++r) proj += std::conj(q(r, i)) * q(r, j);
      for (std::size_t r = 0; r < d; ++r) q(r, j) -= proj * q(r, i);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < d; ++r) nrm += std::norm(q(r, j));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < d; ++r) q(r, j) /= nrm;
  }
  return q;
}

CMatrix random_state(std::size_t dim, std::mt19937_64& rng) {
  CMatrix v = random_gaussian(dim, 1, rng);
  v *= 1.0 / v.norm();
  return v;
}

std::string to_string(const CMatrix& a, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const cplx z = a(r, c);
      os << (c ? ", " : "") << z.real();
      if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    os << (r + 1 == a.rows() ? "]" : "\n");
  }
  return os.str();
}

}  // namespace bellkit
