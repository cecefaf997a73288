// Copyright 2026 The Authors.
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

#include "xclab/matrix.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>

namespace xclab {

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << "/" << denominator(x);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den <= 0) throw DomainError("rational denominator must be positive: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw DomainError("malformed rational literal: " + s);
  }
}

Int rat_floor(const Rat& x) {
  Int q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

Rat linf_norm(const RatVector& v) {
  Rat best = 0;
  for (const Rat& x : v) {
    Rat a = abs(x);
    if (a > best) best = std::move(a);
  }
  return best;
}

std::size_t bit_length(const Int& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.backend().data(), 2);
}

Int ceil_log2(const Int& m) {
  if (m < 1) throw DomainError("ceil_log2 requires m >= 1");
  return Int(bit_length(m - 1));
}

Int ceil_sqrt(const Int& m) {
  if (m < 0) throw DomainError("ceil_sqrt requires m >= 0");
  Int s = sqrt(m);  // floor square root
  return s * s == m ? s : s + 1;
}

RatMatrix RatMatrix::identity(int k) {
  RatMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const int r = int(rows.size());
  const int c = r == 0 ? 0 : int(rows.front().size());
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw DimensionError("ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVector RatMatrix::row(int i) const {
  RatVector out(cols);
  for (int j = 0; j < cols; ++j) out[j] = at(i, j);
  return out;
}

RatVector RatMatrix::col(int j) const {
  RatVector out(rows);
  for (int i = 0; i < rows; ++i) out[i] = at(i, j);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const Rat& x : entries)
    if (x != 0) return false;
  return true;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols != b.rows) throw DimensionError("matrix product shape mismatch");
  RatMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

RatVector mul(const RatMatrix& m, const RatVector& x) {
  if (int(x.size()) != m.cols) throw DimensionError("matrix-vector shape mismatch");
  RatVector y(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) y[i] += m.at(i, j) * x[j];
  return y;
}

Rat linf_norm(const RatMatrix& m) {
  Rat best = 0;
  for (const Rat& x : m.entries) {
    Rat a = abs(x);
    if (a > best) best = std::move(a);
  }
  return best;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// In-place forward elimination. Returns the pivot columns and the sign of
// the row permutation; the matrix ends in row echelon form.
struct Echelon {
  std::vector<int> pivot_cols;
  int sign = 1;
};

Echelon eliminate(RatMatrix& m) {
  Echelon e;
  int pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int sel = -1;
    for (int i = pivot_row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
      e.sign = -e.sign;
    }
    const Rat pivot = m.at(pivot_row, col);
    for (int i = pivot_row + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rat factor = m.at(i, col) / pivot;
      m.at(i, col) = 0;
      for (int j = col + 1; j < m.cols; ++j) m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return e;
}

}  // namespace

Rat det(const RatMatrix& m) {
  if (m.rows != m.cols) throw DimensionError("determinant of non-square matrix");
  if (m.rows == 0) return 1;
  RatMatrix work = m;
  const Echelon e = eliminate(work);
  if (int(e.pivot_cols.size()) < m.rows) return 0;
  Rat d = e.sign;
  for (int i = 0; i < m.rows; ++i) d *= work.at(i, i);
  return d;
}

int rank(const RatMatrix& m) {
  RatMatrix work = m;
  return int(eliminate(work).pivot_cols.size());
}

Rat gram_volume_sq(const std::vector<RatVector>& vectors) {
  const int k = int(vectors.size());
  if (k == 0) return 1;
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw DimensionError("gram vectors of mixed dimension");
  RatMatrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Rat s = dot(vectors[i], vectors[j]);
      g.at(j, i) = s;
      g.at(i, j) = std::move(s);
    }
  return det(g);
}

RatVector cramer_coefficients(const std::vector<RatVector>& basis,
                              const RatVector& target) {
  const int k = int(basis.size());
  if (k == 0) throw RankError("empty basis");
  for (const auto& v : basis)
    if (v.size() != target.size())
      throw DimensionError("basis/target dimension mismatch");
  // Normal equations G lambda = W^T t; exact since G is invertible for an
  // independent basis.
  RatMatrix aug(k, k + 1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = dot(basis[i], basis[j]);
    aug.at(i, k) = dot(basis[i], target);
  }
  RatMatrix work = aug;
  const Echelon e = eliminate(work);
  if (e.pivot_cols.size() < std::size_t(k) || e.pivot_cols.back() == k)
    throw RankError("dependent basis");
  RatVector lambda(k);
  for (int i = k - 1; i >= 0; --i) {
    Rat s = work.at(i, k);
    for (int j = i + 1; j < k; ++j) s -= work.at(i, j) * lambda[j];
    lambda[i] = s / work.at(i, i);
  }
  // The normal equations have a solution even for targets off the span
  // (least squares); exact reconstruction separates the two cases.
  RatVector recon(target.size());
  for (int i = 0; i < k; ++i)
    for (std::size_t j = 0; j < target.size(); ++j) recon[j] += lambda[i] * basis[i][j];
  if (recon != target) throw SpanError("target not in basis span");
  return lambda;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RatMatrix work = m;
  const Echelon e = eliminate(work);
  // Back-substitute to reduced form so free-column entries can be read off.
  const int r = int(e.pivot_cols.size());
  for (int i = r - 1; i >= 0; --i) {
    const int pc = e.pivot_cols[i];
    const Rat pivot = work.at(i, pc);
    for (int j = pc; j < work.cols; ++j) work.at(i, j) /= pivot;
    for (int above = 0; above < i; ++above) {
      const Rat f = work.at(above, pc);
      if (f == 0) continue;
      for (int j = pc; j < work.cols; ++j) work.at(above, j) -= f * work.at(i, j);
    }
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (int pc : e.pivot_cols) is_pivot[pc] = true;
  std::vector<RatVector> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols);
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[e.pivot_cols[i]] = -work.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntVector primitive_integer(const RatVector& v) {
  Int lcm_den = 1;
  for (const Rat& x : v) lcm_den = lcm(lcm_den, Int(denominator(x)));
  IntVector out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Int(numerator(v[i])) * (lcm_den / Int(denominator(v[i])));
    g = gcd(g, out[i]);
  }
  if (g == 0) throw DomainError("primitive_integer of zero vector");
  int first_nonzero_sign = 0;
  for (const Int& x : out)
    if (x != 0) {
      first_nonzero_sign = x > 0 ? 1 : -1;
      break;
    }
  if (first_nonzero_sign < 0) g = -g;
  for (Int& x : out) x /= g;
  return out;
}

}  // namespace xclab
