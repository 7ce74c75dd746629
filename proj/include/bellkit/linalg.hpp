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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellkit {

using cplx = std::complex<double>;

/// Absolute tolerance used by every identity check unless overridden.
inline constexpr double kDefaultTol = 1e-12;

/// Largest row or column count a CMatrix may have.
inline constexpr std::size_t kMaxAxis = std::size_t{1} << 24;
/// Largest number of stored entries (guards against accidental 2^24 x 2^24).
inline constexpr std::size_t kMaxEntries = std::size_t{1} << 27;

struct Tolerance {
  double abs_eps = kDefaultTol;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix. State vectors are stored as columns.
///
/// Qudit ordering is big-endian: wire 0 is the most significant digit of the
/// row/column index.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols);
  static CMatrix column(std::vector<cplx> entries);
  /// Computational basis ket |index> in dimension dim.
  static CMatrix basis_ket(std::size_t dim, std::size_t index);
  static CMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool is_column() const { return cols_ == 1; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  /// Flat access, mostly for column vectors.
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }

  std::span<const cplx> entries() const { return data_; }
  std::span<cplx> entries() { return data_; }

  /// Frobenius norm (the 2-norm for a column).
  double norm() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

/// Kronecker product: entry (ia*rb+ib, ja*cb+jb) = a(ia,ja)*b(ib,jb).
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix tensor_all(std::span<const CMatrix> factors);
/// a^{\otimes k}; k = 0 gives the 1x1 identity.
CMatrix tensor_power(const CMatrix& a, std::size_t k);

CMatrix dagger(const CMatrix& a);
CMatrix transpose(const CMatrix& a);
CMatrix conj(const CMatrix& a);
CMatrix mul(const CMatrix& a, const CMatrix& b);
CMatrix matrix_power(const CMatrix& a, unsigned k);

cplx trace(const CMatrix& a);
/// tr(a^dagger b) / d for d x d matrices.
cplx hs_inner(const CMatrix& a, const CMatrix& b);
/// <a|b> for column vectors of equal length.
cplx inner(const CMatrix& a, const CMatrix& b);
/// |ket><bra|.
CMatrix outer(const CMatrix& ket, const CMatrix& bra);

/// Max-abs entrywise difference.
double residual(const CMatrix& a, const CMatrix& b);
/// Max-abs entry.
double max_abs(const CMatrix& a);
/// Max-abs deviation of a^dagger a from the identity.
double unitarity_residual(const CMatrix& a);
bool is_unitary(const CMatrix& a, double tol = kDefaultTol);
bool is_hermitian(const CMatrix& a, double tol = kDefaultTol);

/// Largest singular value via power iteration on a^dagger a.
double spectral_norm(const CMatrix& a);

/// Permutation matrix on perm.size() wires of dimension local_dim sending the
/// basis ket with digits s to the ket with digits t where t[perm[q]] = s[q].
/// Composition: permutation_matrix(sigma o pi) = P(sigma) * P(pi).
CMatrix permutation_matrix(std::span<const std::size_t> perm, std::size_t local_dim);

/// Applies `op` (acting on `wires.size()` wires) to the listed wires of a
/// state on `num_wires` wires of dimension `local_dim`, without forming the
/// full tensor product.
CMatrix apply_on_wires(const CMatrix& op, std::span<const std::size_t> wires,
                       const CMatrix& state, std::size_t num_wires,
                       std::size_t local_dim = 2);

/// (op (x) 1_right) |state>.
CMatrix apply_left(const CMatrix& op, const CMatrix& state, std::size_t right_dim);
/// (1_left (x) op) |state>.
CMatrix apply_right(const CMatrix& op, const CMatrix& state, std::size_t left_dim);

/// Partial inner product (<bra| (x) 1_right) |state>, with bra on the leading
/// factor of the state.
CMatrix contract_left(const CMatrix& bra, const CMatrix& state);

/// Rank of a matrix by Gaussian elimination with partial pivoting.
std::size_t rank(const CMatrix& a, double pivot_tol = 1e-10);

/// Solves a x = b for square nonsingular a; throws DomainError if singular.
CMatrix solve(const CMatrix& a, const CMatrix& b, double pivot_tol = 1e-10);

/// Complex matrix with i.i.d. standard complex Gaussian entries.
CMatrix random_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng);
/// Haar-random unitary: QR of a complex Gaussian with positive-real R diagonal.
CMatrix haar_unitary(std::size_t d, std::mt19937_64& rng);
/// Uniformly random unit vector.
CMatrix random_state(std::size_t dim, std::mt19937_64& rng);

std::string to_string(const CMatrix& a, int precision = 4);

}  // namespace bellkit
