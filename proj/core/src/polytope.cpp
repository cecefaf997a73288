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

#include "xclab/polytope.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace xclab {

namespace {

bool row_less(const std::pair<IntVector, Int>& lhs,
              const std::pair<IntVector, Int>& rhs) {
  if (lhs.second != rhs.second) return lhs.second > rhs.second;  // rhs descending
  return lhs.first < rhs.first;                                  // coeffs ascending
}

// Visits all index subsets of size k in lexicographic order.
template <typename Fn>
void for_each_combination(int universe, int k, Fn&& fn) {
  if (k > universe || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(const_cast<const std::vector<int>&>(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == universe - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VertexSet make_vertex_set(int n, std::vector<std::vector<int>> points) {
  if (n < 1) throw DomainError("vertex set needs dimension n >= 1");
  if (points.empty()) throw DomainError("vertex set must be nonempty");
  for (const auto& p : points) {
    if (int(p.size()) != n) throw DomainError("vertex of wrong dimension");
    for (int c : p)
      if (c != 0 && c != 1) throw DomainError("vertex coordinate outside {0,1}");
  }
  std::sort(points.begin(), points.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return vertex_index(a) < vertex_index(b);
            });
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i] == points[i - 1]) throw DomainError("duplicate vertex");
  VertexSet X;
  X.n = n;
  X.vertices = std::move(points);
  return X;
}

std::uint64_t vertex_index(const std::vector<int>& x) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) v |= std::uint64_t(1) << i;
  return v;
}

std::vector<int> vertex_from_index(int n, std::uint64_t idx) {
  std::vector<int> x(n);
  for (int i = 0; i < n; ++i) x[i] = int((idx >> i) & 1);
  return x;
}

VertexSet vertex_set_from_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > 6) throw DomainError("mask enumeration supports 1 <= n <= 6");
  std::vector<std::vector<int>> pts;
  const std::uint64_t npoints = std::uint64_t(1) << n;
  for (std::uint64_t p = 0; p < npoints; ++p)
    if (mask & (std::uint64_t(1) << p)) pts.push_back(vertex_from_index(n, p));
  return make_vertex_set(n, std::move(pts));
}

Int delta_int(int n) {
  if (n < 1) throw DomainError("delta_int requires n >= 1");
  return ceil_sqrt(pow(Int(n + 1), unsigned(n + 1)));
}

Rat HPolytope::slack(int row, const RatVector& x) const {
  Rat s(b[row]);
  for (int j = 0; j < n; ++j)
    if (A[row][j] != 0) s -= Rat(A[row][j]) * x[j];
  return s;
}

RatVector HPolytope::row_rat(int i) const { return to_rat(A[i]); }

HPolytope hull(const VertexSet& X) {
  const int n = X.n;
  const int v = X.size();
  const auto& verts = X.vertices;

  auto as_rat = [n](const std::vector<int>& p) {
    RatVector r(n);
    for (int j = 0; j < n; ++j) r[j] = p[j];
    return r;
  };
  auto diff = [n](const std::vector<int>& p, const std::vector<int>& q) {
    RatVector r(n);
    for (int j = 0; j < n; ++j) r[j] = p[j] - q[j];
    return r;
  };

  // Affine hull: directions from the first vertex, equations from the
  // exact nullspace of the direction matrix.
  std::vector<RatVector> directions;
  for (int i = 1; i < v; ++i) directions.push_back(diff(verts[i], verts[0]));
  RatMatrix dir_matrix(int(directions.size()), n);
  for (std::size_t i = 0; i < directions.size(); ++i)
    for (int j = 0; j < n; ++j) dir_matrix.at(int(i), j) = directions[i][j];
  const int dim = rank(dir_matrix);

  std::vector<IntVector> equation_normals;
  for (const RatVector& ns : nullspace(dir_matrix))
    equation_normals.push_back(primitive_integer(ns));

  std::set<std::pair<IntVector, Int>> rows;
  for (const IntVector& e : equation_normals) {
    Int rhs = 0;
    for (int j = 0; j < n; ++j) rhs += e[j] * verts[0][j];
    IntVector neg(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) neg[j] = -e[j];
    rows.insert({e, rhs});
    rows.insert({neg, -rhs});
  }

  if (dim >= 1) {
    for_each_combination(v, dim, [&](const std::vector<int>& subset) {
      // The supporting hyperplane through this subset, constrained to be
      // parallel to the affine hull; a one-dimensional nullspace pins it.
      std::vector<RatVector> constraint_rows;
      for (std::size_t i = 1; i < subset.size(); ++i)
        constraint_rows.push_back(diff(verts[subset[i]], verts[subset[0]]));
      for (const IntVector& e : equation_normals)
        constraint_rows.push_back(to_rat(e));
      RatMatrix m(int(constraint_rows.size()), n);
      for (std::size_t i = 0; i < constraint_rows.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(int(i), j) = constraint_rows[i][j];
      const auto ns = nullspace(m);
      if (ns.size() != 1) return;
      const IntVector normal = primitive_integer(ns.front());

      Int at_subset = 0;
      for (int j = 0; j < n; ++j) at_subset += normal[j] * verts[subset[0]][j];
      Int lo = at_subset, hi = at_subset;
      for (int i = 0; i < v; ++i) {
        Int val = 0;
        for (int j = 0; j < n; ++j) val += normal[j] * verts[i][j];
        if (val < lo) lo = val;
        if (val > hi) hi = val;
      }
      const bool max_side = hi == at_subset;
      const bool min_side = lo == at_subset;
      if (!max_side && !min_side) return;

      IntVector a = normal;
      Int beta = at_subset;
      if (!max_side) {
        for (Int& c : a) c = -c;
        beta = -beta;
      }
      // Tight set must span a facet: affine dimension dim-1 exactly.
      std::vector<int> tight;
      for (int i = 0; i < v; ++i) {
        Int val = 0;
        for (int j = 0; j < n; ++j) val += a[j] * verts[i][j];
        if (val == beta) tight.push_back(i);
      }
      std::vector<RatVector> tight_dirs;
      for (std::size_t i = 1; i < tight.size(); ++i)
        tight_dirs.push_back(diff(verts[tight[i]], verts[tight[0]]));
      RatMatrix tm(int(tight_dirs.size()), n);
      for (std::size_t i = 0; i < tight_dirs.size(); ++i)
        for (int j = 0; j < n; ++j) tm.at(int(i), j) = tight_dirs[i][j];
      if (rank(tm) != dim - 1) return;
      rows.insert({a, beta});
    });
  }

  std::vector<std::pair<IntVector, Int>> ordered(rows.begin(), rows.end());
  std::sort(ordered.begin(), ordered.end(), row_less);

  HPolytope P;
  P.n = n;
  P.delta = delta_int(n);
  for (auto& [a, beta] : ordered) {
    for (const Int& c : a)
      if (abs(c) > P.delta) throw InternalError("facet coefficient exceeds delta bound");
    if (abs(beta) > P.delta) throw InternalError("facet rhs exceeds delta bound");
    P.A.push_back(std::move(a));
    P.b.push_back(std::move(beta));
  }
  // Every vertex must satisfy the emitted system.
  for (int i = 0; i < v; ++i) {
    const RatVector x = as_rat(verts[i]);
    for (int r = 0; r < P.num_rows(); ++r)
      if (P.slack(r, x) < 0) throw InternalError("hull row cuts off a vertex");
  }
  return P;
}

SlackMatrix slack_matrix(const HPolytope& P, const VertexSet& X) {
  if (P.n != X.n) throw DimensionError("polytope/vertex-set dimension mismatch");
  SlackMatrix out;
  out.f = P.num_rows();
  out.v = X.size();
  out.S = RatMatrix(out.f, out.v);
  for (int j = 0; j < out.v; ++j) {
    RatVector x(P.n);
    for (int c = 0; c < P.n; ++c) x[c] = X.vertices[j][c];
    for (int i = 0; i < out.f; ++i) {
      Rat s = P.slack(i, x);
      if (s < 0)
        throw ConsistencyError("vertex violates the inequality system");
      out.S.at(i, j) = std::move(s);
    }
  }
  return out;
}

}  // namespace xclab
