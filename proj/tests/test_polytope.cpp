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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "xclab/lp.hpp"
#include "xclab/polytope.hpp"

using namespace xclab;

namespace {

// All 0/1 points of {0,1}^n that satisfy Ax <= b.
std::set<std::uint64_t> integral_points(const HPolytope& P) {
  std::set<std::uint64_t> out;
  for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << P.n); ++idx) {
    const auto pt = vertex_from_index(P.n, idx);
    RatVector x(P.n);
    for (int j = 0; j < P.n; ++j) x[j] = pt[j];
    bool inside = true;
    for (int i = 0; i < P.num_rows() && inside; ++i)
      if (P.slack(i, x) < 0) inside = false;
    if (inside) out.insert(idx);
  }
  return out;
}

}  // namespace

TEST_CASE("vertex set canonicalization and validation") {
  const VertexSet X = make_vertex_set(2, {{0, 1}, {1, 0}, {0, 0}});
  CHECK(X.vertices == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(make_vertex_set(2, {}), DomainError);
  CHECK_THROWS_AS(make_vertex_set(2, {{0, 2}}), DomainError);
  CHECK_THROWS_AS(make_vertex_set(2, {{0, 1}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(make_vertex_set(2, {{0}}), DomainError);
}

TEST_CASE("delta_int fixtures") {
  CHECK(delta_int(1) == 2);
  CHECK(delta_int(2) == 6);  // ceil(3 sqrt 3)
  CHECK(delta_int(3) == 16);
  CHECK(delta_int(4) == 56);
  CHECK_THROWS_AS(delta_int(0), DomainError);
}

TEST_CASE("hull of the unit segment") {
  const HPolytope P = hull(make_vertex_set(1, {{0}, {1}}));
  REQUIRE(P.num_rows() == 2);
  CHECK(P.A == std::vector<IntVector>{{Int(1)}, {Int(-1)}});
  CHECK(P.b == IntVector{Int(1), Int(0)});
}

TEST_CASE("hull of the standard triangle") {
  const HPolytope P = hull(make_vertex_set(2, {{0, 0}, {1, 0}, {0, 1}}));
  REQUIRE(P.num_rows() == 3);
  CHECK(P.A == std::vector<IntVector>{{Int(1), Int(1)}, {Int(-1), Int(0)}, {Int(0), Int(-1)}});
  CHECK(P.b == IntVector{Int(1), Int(0), Int(0)});
}

TEST_CASE("hull of a single point is the box-equality pair system") {
  const HPolytope P = hull(make_vertex_set(2, {{1, 1}}));
  REQUIRE(P.num_rows() == 4);
  std::set<std::pair<IntVector, Int>> rows;
  for (int i = 0; i < 4; ++i) rows.insert({P.A[i], P.b[i]});
  CHECK(rows.count({{Int(1), Int(0)}, Int(1)}) == 1);
  CHECK(rows.count({{Int(-1), Int(0)}, Int(-1)}) == 1);
  CHECK(rows.count({{Int(0), Int(1)}, Int(1)}) == 1);
  CHECK(rows.count({{Int(0), Int(-1)}, Int(-1)}) == 1);
}

TEST_CASE("exhaustive n <= 3: hull separates members from non-members") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t num_sets = (std::uint64_t(1) << (std::uint64_t(1) << n)) - 1;
    for (std::uint64_t mask = 1; mask <= num_sets; ++mask) {
      const VertexSet X = vertex_set_from_mask(n, mask);
      const HPolytope P = hull(X);
      std::set<std::uint64_t> expect;
      for (const auto& v : X.vertices) expect.insert(vertex_index(v));
      CHECK(integral_points(P) == expect);
      // Integrality pushes every excluded 0/1 point at least 1 deep.
      for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << n); ++idx) {
        if (expect.count(idx)) continue;
        const auto pt = vertex_from_index(n, idx);
        RatVector x(n);
        for (int j = 0; j < n; ++j) x[j] = pt[j];
        Rat worst = 0;
        for (int i = 0; i < P.num_rows(); ++i) worst = std::min(worst, P.slack(i, x));
        CHECK(worst <= -1);
      }
      CHECK(linf_norm(to_rat(P.b)) <= Rat(P.delta));
      for (const auto& row : P.A) CHECK(linf_norm(to_rat(row)) <= Rat(P.delta));
    }
  }
}

TEST_CASE("coefficient bound and exact separation on sampled n = 4 hulls") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> mask_dist(
      1, (std::uint64_t(1) << 16) - 1);
  const Rat bound(delta_int(4));
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t mask = mask_dist(rng);
    const VertexSet X = vertex_set_from_mask(4, mask);
    const HPolytope P = hull(X);
    for (const auto& row : P.A) CHECK(linf_norm(to_rat(row)) <= bound);
    CHECK(linf_norm(to_rat(P.b)) <= bound);
    std::set<std::uint64_t> expect;
    for (const auto& v : X.vertices) expect.insert(vertex_index(v));
    CHECK(integral_points(P) == expect);
  }
}

TEST_CASE("non-redundancy: dropping a row strictly enlarges the set") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::uint64_t> mask_dist(1, 254);
  std::vector<std::uint64_t> masks = {0b10110101, 0b11111111, 0b00010110};
  for (int trial = 0; trial < 12; ++trial) masks.push_back(mask_dist(rng));
  for (std::uint64_t mask : masks) {
    const HPolytope P = hull(vertex_set_from_mask(3, mask));
    for (int drop = 0; drop < P.num_rows(); ++drop) {
      LinearSystem sys(P.n);
      for (int i = 0; i < P.num_rows(); ++i) {
        if (i == drop) continue;
        sys.add(P.row_rat(i), Relation::LessEq, Rat(P.b[i]));
      }
      const LpResult res = lp_optimize(P.row_rat(drop), sys, Sense::Maximize);
      const bool enlarged =
          res.status == LpStatus::Unbounded ||
          (res.feasible() && res.optimum && *res.optimum > Rat(P.b[drop]));
      CHECK(enlarged);
    }
  }
}

TEST_CASE("slack matrix fixtures") {
  {
    const VertexSet X = make_vertex_set(1, {{0}, {1}});
    const SlackMatrix S = slack_matrix(hull(X), X);
    CHECK(S.S == RatMatrix::identity(2));
  }
  {
    const VertexSet X = make_vertex_set(2, {{0, 0}, {1, 0}, {0, 1}});
    const SlackMatrix S = slack_matrix(hull(X), X);
    CHECK(S.S == RatMatrix::identity(3));
  }
  {
    const VertexSet X = make_vertex_set(2, {{1, 1}});
    const SlackMatrix S = slack_matrix(hull(X), X);
    CHECK(S.f == 4);
    CHECK(S.v == 1);
    CHECK(S.S.is_zero());
  }
}

TEST_CASE("slack matrix rejects foreign vertices") {
  const VertexSet X = make_vertex_set(2, {{0, 0}, {1, 0}, {0, 1}});
  const HPolytope P = hull(X);
  const VertexSet full = make_vertex_set(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(slack_matrix(P, full), ConsistencyError);
}

TEST_CASE("slack entries stay within the stated band") {
  for (std::uint64_t mask : {std::uint64_t(0b1011), std::uint64_t(0b0111),
                             std::uint64_t(0b1111), std::uint64_t(0b1001)}) {
    const VertexSet X = vertex_set_from_mask(2, mask);
    const HPolytope P = hull(X);
    const SlackMatrix S = slack_matrix(P, X);
    const Rat cap = Rat(3) * Rat(P.delta);  // (n+1) delta at n = 2
    for (const Rat& e : S.S.entries) {
      CHECK(e >= 0);
      CHECK(e <= cap);
      CHECK(is_integer(e));
    }
    // Non-redundant rows are tight somewhere.
    for (int i = 0; i < S.f; ++i) {
      bool has_zero = false;
      for (int j = 0; j < S.v; ++j)
        if (S.S.at(i, j) == 0) has_zero = true;
      CHECK(has_zero);
    }
  }
}
