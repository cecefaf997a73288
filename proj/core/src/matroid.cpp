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

#include "xclab/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "xclab/lp.hpp"

namespace xclab {

namespace {

std::string set_to_string(std::uint32_t mask) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) {
      if (!first) os << ",";
      os << (i + 1);
      first = false;
    }
  os << "}";
  return os.str();
}

}  // namespace

bool Matroid::is_independent(std::uint32_t set) const {
  return std::binary_search(independent.begin(), independent.end(), set);
}

std::optional<AxiomViolation> check_matroid_axioms(
    int n, const std::vector<std::uint32_t>& family) {
  if (n < 1 || n > 16)
    throw DomainError("explicit matroid checks support 1 <= n <= 16");
  std::vector<std::uint32_t> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::uint32_t universe = (n == 32 ? ~0u : (1u << n) - 1);

  auto member = [&sorted](std::uint32_t s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };

  if (!member(0))
    return AxiomViolation{"downward-closure", 0, 0, "empty set missing"};
  for (std::uint32_t I : sorted) {
    if (I & ~universe)
      return AxiomViolation{"downward-closure", I, 0,
                            "set uses elements beyond the ground set"};
    for (int z = 0; z < n; ++z) {
      if (!(I & (1u << z))) continue;
      const std::uint32_t J = I & ~(1u << z);
      if (!member(J))
        return AxiomViolation{"downward-closure", I, J,
                              "subset " + set_to_string(J) + " of " +
                                  set_to_string(I) + " is missing"};
    }
  }
  for (std::uint32_t I : sorted)
    for (std::uint32_t J : sorted) {
      if (std::popcount(I) >= std::popcount(J)) continue;
      bool extended = false;
      for (int z = 0; z < n && !extended; ++z)
        if ((J & (1u << z)) && !(I & (1u << z)) && member(I | (1u << z)))
          extended = true;
      if (!extended)
        return AxiomViolation{"exchange", I, J,
                              "no element of " + set_to_string(J) +
                                  " extends " + set_to_string(I)};
    }
  return std::nullopt;
}

Matroid validate_matroid(int n, std::vector<std::uint32_t> family) {
  if (const auto violation = check_matroid_axioms(n, family))
    throw DomainError("matroid axiom (" + violation->axiom +
                      ") fails: " + violation->detail);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return Matroid{n, std::move(family)};
}

Matroid uniform_matroid(int n, int k) {
  if (n < 1 || n > 16) throw DomainError("uniform matroid supports 1 <= n <= 16");
  if (k < 0 || k > n) throw DomainError("uniform matroid needs 0 <= k <= n");
  std::vector<std::uint32_t> family;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) <= k) family.push_back(s);
  return Matroid{n, std::move(family)};
}

Matroid graphic_matroid(int num_nodes,
                        const std::vector<std::pair<int, int>>& edges) {
  const int m = int(edges.size());
  if (m < 1) throw DomainError("graphic matroid needs at least one edge");
  if (m > 16) throw DomainError("graphic matroid supports at most 16 edges");
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_nodes || b >= num_nodes)
      throw DomainError("edge endpoint out of range");
    if (a == b) throw DomainError("loops are not allowed in a simple graph");
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if ((a == c && b == d) || (a == d && b == c))
        throw DomainError("parallel edges are not allowed in a simple graph");
    }

  std::vector<std::uint32_t> family;
  std::vector<int> parent(num_nodes);
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool forest = true;
    for (int e = 0; e < m && forest; ++e) {
      if (!(s & (1u << e))) continue;
      const int ra = find(edges[e].first);
      const int rb = find(edges[e].second);
      if (ra == rb)
        forest = false;
      else
        parent[ra] = rb;
    }
    if (forest) family.push_back(s);
  }
  return Matroid{m, std::move(family)};
}

int matroid_rank(const Matroid& M, std::uint32_t S) {
  int best = 0;
  for (std::uint32_t I : M.independent)
    if ((I & ~S) == 0) best = std::max(best, std::popcount(I));
  return best;
}

GreedyResult greedy_optimize(const Matroid& M, const RatVector& weights) {
  if (int(weights.size()) != M.n)
    throw DimensionError("weight vector arity does not match the ground set");
  std::vector<int> order(M.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&weights](int a, int b) {
    return weights[a] > weights[b];
  });
  GreedyResult res;
  res.value = 0;
  for (int e : order) {
    if (weights[e] <= 0) continue;
    const std::uint32_t candidate = res.set | (1u << e);
    if (M.is_independent(candidate)) {
      res.set = candidate;
      res.value += weights[e];
    }
  }
  return res;
}

MatroidPolytope matroid_polytope(const Matroid& M) {
  const int n = M.n;
  std::vector<std::vector<int>> points;
  for (std::uint32_t I : M.independent) {
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = (I >> i) & 1;
    points.push_back(std::move(x));
  }
  MatroidPolytope out;
  out.vertices = make_vertex_set(n, std::move(points));

  std::vector<std::pair<IntVector, Int>> rows;
  for (std::uint32_t S = 1; S < (1u << n); ++S) {
    IntVector coeffs(n, Int(0));
    for (int i = 0; i < n; ++i)
      if (S & (1u << i)) coeffs[i] = 1;
    rows.emplace_back(std::move(coeffs), Int(matroid_rank(M, S)));
  }
  for (int i = 0; i < n; ++i) {
    IntVector coeffs(n, Int(0));
    coeffs[i] = -1;
    rows.emplace_back(std::move(coeffs), Int(0));
  }

  // One deterministic pruning pass: a row implied by the currently active
  // remainder is dropped for good, so the surviving system is irredundant.
  std::vector<bool> active(rows.size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    LinearSystem sys(n);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!active[j] || j == i) continue;
      sys.add(to_rat(rows[j].first), Relation::LessEq, Rat(rows[j].second));
    }
    const LpResult res =
        lp_optimize(to_rat(rows[i].first), sys, Sense::Maximize);
    const bool redundant =
        res.feasible() && res.optimum && *res.optimum <= Rat(rows[i].second);
    if (redundant) active[i] = false;
  }

  std::vector<std::pair<IntVector, Int>> kept;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (active[i]) kept.push_back(rows[i]);
  std::sort(kept.begin(), kept.end(),
            [](const std::pair<IntVector, Int>& lhs,
               const std::pair<IntVector, Int>& rhs) {
              if (lhs.second != rhs.second) return lhs.second > rhs.second;
              return lhs.first < rhs.first;
            });

  out.polytope.n = n;
  out.polytope.delta = delta_int(n);
  for (auto& [a, beta] : kept) {
    out.polytope.A.push_back(std::move(a));
    out.polytope.b.push_back(std::move(beta));
  }
  // Every characteristic vector must satisfy the pruned system.
  for (const auto& vert : out.vertices.vertices) {
    RatVector x(n);
    for (int i = 0; i < n; ++i) x[i] = vert[i];
    for (int row = 0; row < out.polytope.num_rows(); ++row)
      if (out.polytope.slack(row, x) < 0)
        throw InternalError("rank system cuts off an independent set");
  }
  return out;
}

namespace {

LinearSystem polytope_system(const HPolytope& P) {
  LinearSystem sys(P.n);
  for (int i = 0; i < P.num_rows(); ++i)
    sys.add(P.row_rat(i), Relation::LessEq, Rat(P.b[i]));
  return sys;
}

}  // namespace

CertificateReport verify_rank_description(const MatroidPolytope& MP) {
  CertificateReport report;
  const HPolytope reference = hull(MP.vertices);
  const LinearSystem rank_sys = polytope_system(MP.polytope);
  const LinearSystem hull_sys = polytope_system(reference);

  for (int j = 0; j < MP.vertices.size(); ++j) {
    RatVector x(MP.vertices.n);
    for (int c = 0; c < MP.vertices.n; ++c) x[c] = MP.vertices.vertices[j][c];
    const bool ok = rank_sys.satisfied_by(x) && hull_sys.satisfied_by(x);
    report.add("vertex_in_both[" + std::to_string(j + 1) + "]", ok);
  }
  for (int i = 0; i < reference.num_rows(); ++i) {
    const LpResult res =
        lp_optimize(reference.row_rat(i), rank_sys, Sense::Maximize);
    const bool ok =
        res.feasible() && res.optimum && *res.optimum <= Rat(reference.b[i]);
    report.add("hull_row_over_rank_system[" + std::to_string(i + 1) + "]", ok);
  }
  for (int i = 0; i < MP.polytope.num_rows(); ++i) {
    const LpResult res =
        lp_optimize(MP.polytope.row_rat(i), hull_sys, Sense::Maximize);
    const bool ok =
        res.feasible() && res.optimum && *res.optimum <= Rat(MP.polytope.b[i]);
    report.add("rank_row_over_hull[" + std::to_string(i + 1) + "]", ok);
  }
  return report;
}

}  // namespace xclab
