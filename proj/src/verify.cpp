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

#include "bellkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace bellkit {

namespace {

std::size_t isqrt_exact(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (r * r != n) throw ShapeError("family dimension " + std::to_string(n) + " is not a square");
  return r;
}

double gram_residual(const BasisFamily& fam) {
  double worst = 0.0;
  for (std::size_t a = 0; a < fam.size(); ++a) {
    for (std::size_t b = 0; b < fam.size(); ++b) {
      const cplx g = inner(fam.states[a], fam.states[b]);
      worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double completeness_residual(const BasisFamily& fam) {
  CMatrix sum(fam.dim, fam.dim);
  for (const auto& s : fam.states) {
    for (std::size_t r = 0; r < fam.dim; ++r) {
      if (s[r] == cplx{}) continue;
      for (std::size_t c = 0; c < fam.dim; ++c) sum(r, c) += s[r] * std::conj(s[c]);
    }
  }
  return residual(sum, CMatrix::identity(fam.dim));
}

CMatrix kron_id(const CMatrix& a, std::size_t d) { return tensor(a, CMatrix::identity(d)); }
CMatrix id_kron(std::size_t d, const CMatrix& a) { return tensor(CMatrix::identity(d), a); }

}  // namespace

// ---------------------------------------------------------------------------
// Families

BasisFamily BasisFamily::from_unitaries(const UnitaryBasis& basis) {
  BasisFamily f;
  const auto d = static_cast<std::size_t>(basis.d);
  f.dim = d * d;
  for (std::size_t i = 0; i < basis.ops.size(); ++i) {
    f.states.push_back(bell_from_op(basis.ops[i]));
    f.labels.push_back(basis.labels[i]);
    f.ops.push_back(basis.ops[i]);
  }
  return f;
}

BasisFamily BasisFamily::qubit_bell() { return from_unitaries(qubit_pauli_basis()); }
BasisFamily BasisFamily::qudit_bell(int d) { return from_unitaries(gen_pauli_basis(d)); }
BasisFamily BasisFamily::multi_bell(std::size_t n) { return from_unitaries(pauli_word_basis(n)); }

std::size_t BasisFamily::local_dim() const { return isqrt_exact(dim); }

Report gram_check(const BasisFamily& fam, double tol) {
  if (fam.states.empty()) throw DomainError("gram_check: empty family");
  Report r("gram", tol);
  r.params["dim"] = std::to_string(fam.dim);
  r.params["size"] = std::to_string(fam.size());
  double norm_dev = 0.0;
  for (const auto& s : fam.states) {
    if (!s.is_column() || s.rows() != fam.dim) throw ShapeError("gram_check: state shape");
    norm_dev = std::max(norm_dev, std::abs(s.norm() - 1.0));
  }
  r.check("unit-norm", norm_dev);
  r.check("gram", gram_residual(fam));
  return r;
}

Report completeness_check(const BasisFamily& fam, double tol) {
  Report r("completeness", tol);
  r.params["dim"] = std::to_string(fam.dim);
  r.params["size"] = std::to_string(fam.size());
  const double size_gap =
      std::abs(static_cast<double>(fam.size()) - static_cast<double>(fam.dim));
  r.params["incomplete_family"] = size_gap > 0 ? "true" : "false";
  r.check_below("family-size", size_gap, 0.5);
  for (const auto& s : fam.states) {
    if (!s.is_column() || s.rows() != fam.dim) throw ShapeError("completeness_check: state shape");
  }
  r.check("completeness", completeness_residual(fam));
  return r;
}

BasisFamily extend_basis(const BasisFamily& fam, const CMatrix& m, Side side) {
  if (fam.ops.size() != fam.states.size()) {
    throw DomainError("extend_basis: family carries no local operators");
  }
  const std::size_t d = fam.local_dim();
  if (!m.is_square() || m.rows() != d) {
    throw ShapeError("extend_basis: M must be " + std::to_string(d) + " x " + std::to_string(d));
  }
  BasisFamily out;
  out.dim = fam.dim;
  out.labels = fam.labels;
  for (const auto& u : fam.ops) {
    const CMatrix op = side == Side::Left ? m * u : u * m;
    out.ops.push_back(op);
    out.states.push_back(bell_from_op(op));
  }
  return out;
}

CMatrix perturbed_nonunitary(const CMatrix& u, std::mt19937_64& rng, double min_dev) {
  CMatrix g = random_gaussian(u.rows(), u.cols(), rng);
  g *= 1.0 / spectral_norm(g);
  const CMatrix id = CMatrix::identity(u.rows());
  for (double eps = 0.05;; eps *= 2.0) {
    CMatrix m = u + eps * g;
    if (spectral_norm(dagger(m) * m - id) >= min_dev) return m;
  }
}

Report basis_theorem_suite(const BasisFamily& fam, std::size_t trials, std::uint64_t seed,
                           double tol) {
  const std::size_t d = fam.local_dim();
  Report r("basis-theorem", tol);
  r.seed = seed;
  r.params["d"] = std::to_string(d);
  r.params["trials"] = std::to_string(trials);
  std::mt19937_64 rng(seed);

  const double control_floor = 1e-3;
  std::size_t misclassified = 0;
  double uni[2] = {0.0, 0.0};
  double uni_comp[2] = {0.0, 0.0};
  double non[2] = {1e300, 1e300};
  for (std::size_t t = 0; t < trials; ++t) {
    const CMatrix u = haar_unitary(d, rng);
    const CMatrix m = perturbed_nonunitary(haar_unitary(d, rng), rng);
    for (int s = 0; s < 2; ++s) {
      const Side side = s == 0 ? Side::Left : Side::Right;
      const BasisFamily good = extend_basis(fam, u, side);
      const double g = gram_residual(good);
      const double c = completeness_residual(good);
      uni[s] = std::max(uni[s], g);
      uni_comp[s] = std::max(uni_comp[s], c);
      if (g >= tol || c >= tol) ++misclassified;

      const double bad = gram_residual(extend_basis(fam, m, side));
      non[s] = std::min(non[s], bad);
      if (bad <= control_floor) ++misclassified;
    }
  }
  if (trials > 0) {
    r.check("unitary-left-gram", uni[0]);
    r.check("unitary-left-completeness", uni_comp[0]);
    r.check("unitary-right-gram", uni[1]);
    r.check("unitary-right-completeness", uni_comp[1]);
    r.check_above("nonunitary-left-gram", non[0], control_floor);
    r.check_above("nonunitary-right-gram", non[1], control_floor);
  }
  r.check_below("misclassified", static_cast<double>(misclassified), 0.5);

  // sum_a U_a M|i><j|M^dagger U_a^dagger / d = (M^dagger M)_{ji} 1 for any M.
  if (fam.ops.size() == d * d) {
    CMatrix m = random_gaussian(d, d, rng);
    m *= 1.0 / spectral_norm(m);
    const CMatrix mm = dagger(m) * m;
    const CMatrix id = CMatrix::identity(d);
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const CMatrix x = outer(m * CMatrix::basis_ket(d, i), m * CMatrix::basis_ket(d, j));
        CMatrix sum(d, d);
        for (const auto& ua : fam.ops) sum += ua * x * dagger(ua);
        sum *= 1.0 / static_cast<double>(d);
        worst = std::max(worst, residual(sum, mm(j, i) * id));
      }
    }
    r.check("reduced-completeness", worst);
  }
  return r;
}

Report basis_theorem_suite(int d, std::size_t trials, std::uint64_t seed, double tol) {
  if (d < 2 || d > 8) throw DomainError("basis_theorem_suite: d must be in [2, 8]");
  return basis_theorem_suite(BasisFamily::qudit_bell(d), trials, seed, tol);
}

// ---------------------------------------------------------------------------
// Observables

CMatrix observable_a(int d, int k) {
  const CMatrix xk = matrix_power(gen_x(d), static_cast<unsigned>(k));
  return tensor(xk, xk);
}

CMatrix observable_b(int d, int k) {
  const CMatrix zk = matrix_power(gen_z(d), static_cast<unsigned>(k));
  return tensor(zk, dagger(zk));
}

std::vector<ObservableSpec> qudit_observables(int d, int k) {
  if (d < 2) throw DomainError("qudit_observables: d must be at least 2");
  if (k < 1 || k > d - 1) {
    throw DomainError("qudit_observables: k must be in [1, d-1], got " + std::to_string(k));
  }
  const CMatrix a = observable_a(d, k);
  const CMatrix b = observable_b(d, k);
  const cplx half_i{0.0, 0.5};
  std::vector<ObservableSpec> out(4);
  out[0].name = "OX+(" + std::to_string(k) + ")";
  out[0].matrix = 0.5 * (a + dagger(a));
  out[1].name = "OX-(" + std::to_string(k) + ")";
  out[1].matrix = half_i * (a - dagger(a));
  out[2].name = "OZ+(" + std::to_string(k) + ")";
  out[2].matrix = 0.5 * (b + dagger(b));
  out[3].name = "OZ-(" + std::to_string(k) + ")";
  out[3].matrix = -half_i * (b - dagger(b));
  const double base = 2.0 * std::numbers::pi * k / d;
  for (int al = 0; al < d; ++al) {
    for (int be = 0; be < d; ++be) {
      const BellLabel label = BellLabel::qudit2(d, al, be);
      const CMatrix state = qudit_bell(d, al, be);
      out[0].eigenpairs.push_back({label, state, std::cos(base * al)});
      out[1].eigenpairs.push_back({label, state, std::sin(base * al)});
      out[2].eigenpairs.push_back({label, state, std::cos(base * be)});
      out[3].eigenpairs.push_back({label, state, std::sin(base * be)});
    }
  }
  return out;
}

ObservableSpec conjugated_observable(const ObservableSpec& spec, const CMatrix& m, Side side) {
  if (!is_unitary(m, 1e-10)) throw DomainError("conjugated_observable: M must be unitary");
  const std::size_t d = m.rows();
  if (spec.matrix.rows() != d * d) throw ShapeError("conjugated_observable: M size");
  ObservableSpec out;
  if (side == Side::Left) {
    out.name = "M" + spec.name;
    const CMatrix ml = kron_id(m, d);
    out.matrix = ml * spec.matrix * kron_id(dagger(m), d);
  } else {
    out.name = spec.name + "M";
    out.matrix = id_kron(d, transpose(m)) * spec.matrix * id_kron(d, conj(m));
  }
  // States are rebuilt from their labels, not pushed through the conjugation.
  for (const auto& ep : spec.eigenpairs) {
    const CMatrix ua = label_operator(ep.label);
    const CMatrix op = side == Side::Left ? m * ua : ua * m;
    out.eigenpairs.push_back({ep.label, bell_from_op(op), ep.value});
  }
  return out;
}

std::vector<ObservableSpec> multiqubit_observables(std::size_t n) {
  if (n < 1 || n > 5) throw DomainError("multiqubit_observables: n must be in [1, 5]");
  const CMatrix x = pauli_gate(Gate1::X);
  const CMatrix z = pauli_gate(Gate1::Z);
  const CMatrix i2 = CMatrix::identity(2);
  auto pair_op = [&](const CMatrix& p, std::size_t k) {
    std::vector<CMatrix> f(2 * n, i2);
    f[k] = p;
    f[n + k] = p;
    return tensor_all(f);
  };
  std::vector<ObservableSpec> out;
  for (int kind = 0; kind < 2; ++kind) {
    for (std::size_t k = 0; k < n; ++k) {
      ObservableSpec s;
      s.name = std::string(kind == 0 ? "X" : "Z") + std::to_string(k + 1) +
               (kind == 0 ? "X" : "Z") + std::to_string(n + k + 1);
      s.matrix = pair_op(kind == 0 ? x : z, k);
      out.push_back(std::move(s));
    }
  }
  const std::size_t half = std::size_t{1} << n;
  for (std::size_t a = 0; a < half; ++a) {
    for (std::size_t b = 0; b < half; ++b) {
      const BitString alpha = BitString::from_index(a, n);
      const BitString beta = BitString::from_index(b, n);
      const BellLabel label = BellLabel::multi(alpha, beta);
      const CMatrix state = multi_bell(alpha, beta);
      for (std::size_t k = 0; k < n; ++k) {
        out[k].eigenpairs.push_back({label, state, alpha[k] ? -1.0 : 1.0});
        out[n + k].eigenpairs.push_back({label, state, beta[k] ? -1.0 : 1.0});
      }
    }
  }
  return out;
}

Report observable_check(const std::vector<ObservableSpec>& specs, double tol) {
  Report r("observables", tol);
  for (const auto& s : specs) {
    r.check(s.name + "/hermitian", residual(s.matrix, dagger(s.matrix)));
    double worst = 0.0;
    for (const auto& ep : s.eigenpairs) {
      worst = std::max(worst, residual(s.matrix * ep.state, cplx{ep.value} * ep.state));
    }
    r.check(s.name + "/eigen", worst);
  }
  return r;
}

Report multiqubit_labeling_check(std::size_t n, double tol) {
  const auto specs = multiqubit_observables(n);
  Report r("observables-labeling", tol);
  r.params["n"] = std::to_string(n);
  double comm = 0.0;
  for (std::size_t a = 0; a < specs.size(); ++a) {
    for (std::size_t b = a + 1; b < specs.size(); ++b) {
      const CMatrix& p = specs[a].matrix;
      const CMatrix& q = specs[b].matrix;
      comm = std::max(comm, residual(p * q, q * p));
    }
  }
  r.check("commutators", comm);

  // Read the label back from measured expectation values.
  std::size_t mislabeled = 0;
  std::set<std::string> patterns;
  const std::size_t count = specs.front().eigenpairs.size();
  for (std::size_t e = 0; e < count; ++e) {
    const CMatrix& state = specs.front().eigenpairs[e].state;
    BitString alpha(n), beta(n);
    std::string pattern;
    for (std::size_t k = 0; k < 2 * n; ++k) {
      const double v = inner(state, specs[k].matrix * state).real();
      const int bit = v < 0 ? 1 : 0;
      pattern.push_back(static_cast<char>('0' + bit));
      if (k < n) {
        alpha.set(k, bit);
      } else {
        beta.set(k - n, bit);
      }
    }
    patterns.insert(pattern);
    if (!(BellLabel::multi(alpha, beta) == specs.front().eigenpairs[e].label)) ++mislabeled;
  }
  r.check_below("mislabeled", static_cast<double>(mislabeled), 0.5);
  r.check_below("distinct-patterns",
                static_cast<double>(count - patterns.size()), 0.5);
  return r;
}

// ---------------------------------------------------------------------------
// Trace constraints

CMatrix trace_constraint_matrix(std::size_t n) {
  if (n < 1 || n > 3) throw DomainError("trace_constraint_matrix: n must be in [1, 3]");
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t words = dim * dim;
  CMatrix a(words, words);
  const double scale = 1.0 / static_cast<double>(dim);
  std::size_t row = 0;
  for (std::size_t al = 0; al < dim; ++al) {
    for (std::size_t be = 0; be < dim; ++be, ++row) {
      const CMatrix t = word_matrix(
          PauliWord::from_labels(BitString::from_index(al, n), BitString::from_index(be, n)));
      // tr(I T) = sum_{ij} I_ij T_ji.
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) a(row, i * dim + j) = scale * t(j, i);
      }
    }
  }
  return a;
}

Report trace_constraint_solve(std::size_t n, double tol) {
  Report r("trace-constraint", tol);
  r.params["n"] = std::to_string(n);
  const CMatrix a = trace_constraint_matrix(n);
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t words = dim * dim;
  const std::size_t rk = rank(a);
  r.params["rank"] = std::to_string(rk);
  r.check_below("full-rank", std::abs(static_cast<double>(rk) - static_cast<double>(words)), 0.5);

  CMatrix rhs(words, 1);
  rhs[0] = 1.0;  // Only the identity word has a nonzero normalized trace.
  CMatrix vec_id(words, 1);
  for (std::size_t i = 0; i < dim; ++i) vec_id[i * dim + i] = 1.0;
  try {
    const CMatrix x = solve(a, rhs);
    r.check("solution-is-identity", residual(x, vec_id));
    r.check("solution-satisfies-system", residual(a * x, rhs));
    const CMatrix zero = solve(a, CMatrix(words, 1));
    r.check("homogeneous-is-zero", max_abs(zero));
  } catch (const DomainError&) {
    r.check_below("singular-system", 1.0, 0.5);
  }

  if (n == 1) {
    // tr(I) = 2, tr(IX) = 0, tr(IZX) = 0, tr(IZ) = 0 over (I00, I01, I10, I11).
    const CMatrix literal{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, 1, 0}, {1, 0, 0, -1}};
    const CMatrix literal_rhs = CMatrix::column({2, 0, 0, 0});
    const std::size_t order[4] = {0, 1, 3, 2};  // rows of a for I, X, ZX, Z
    CMatrix built(4, 4);
    for (std::size_t row = 0; row < 4; ++row) {
      for (std::size_t c = 0; c < 4; ++c) built(row, c) = 2.0 * a(order[row], c);
    }
    r.check("scalar-equations", residual(built, literal));
    r.check("scalar-solution", residual(solve(literal, literal_rhs), vec_id));
    r.check("scalar-homogeneous", max_abs(solve(literal, CMatrix(4, 1))));
  }
  return r;
}

}  // namespace bellkit
