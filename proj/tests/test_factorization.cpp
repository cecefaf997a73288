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

#include "oracles.hpp"
#include "xclab/factorization.hpp"

using namespace xclab;

namespace {

SlackMatrix slack_of(const VertexSet& X) { return slack_matrix(hull(X), X); }

SlackMatrix wrap(const RatMatrix& S) { return SlackMatrix{S, S.rows, S.cols}; }

RatMatrix from_ints(const std::vector<std::vector<int>>& rows) {
  std::vector<RatVector> r;
  for (const auto& row : rows) {
    RatVector v;
    for (int x : row) v.push_back(Rat(x));
    r.push_back(std::move(v));
  }
  return RatMatrix::from_rows(r);
}

}  // namespace

TEST_CASE("trivial factorizations") {
  {
    const Factorization F = trivial_factorization(wrap(RatMatrix::identity(2)),
                                                  Side::Left);
    CHECK(F.U == RatMatrix::identity(2));
    CHECK(F.V == RatMatrix::identity(2));
    CHECK(F.r == 2);
  }
  {
    const RatMatrix S = from_ints({{1, 0}, {0, 1}, {1, 1}});
    const Factorization F = trivial_factorization(wrap(S), Side::Right);
    CHECK(F.U == RatMatrix::identity(3));
    CHECK(F.V == S);
    CHECK(F.r == 3);
  }
  {
    const RatMatrix zero(4, 1);
    const Factorization F = trivial_factorization(wrap(zero), Side::Left);
    CHECK(F.U == zero);
    CHECK(F.V == RatMatrix::identity(1));
    CHECK(F.r == 1);
  }
}

TEST_CASE("validation fixtures") {
  const SlackMatrix S = wrap(RatMatrix::identity(2));
  CHECK(validate_factorization(S, {RatMatrix::identity(2), RatMatrix::identity(2), 2})
            .ok);
  {
    const ValidationResult bad = validate_factorization(
        S, {RatMatrix::identity(2), from_ints({{1, 1}, {0, 1}}), 2});
    CHECK_FALSE(bad.ok);
    CHECK(bad.detail.find("(1,2)") != std::string::npos);
  }
  {
    const ValidationResult bad = validate_factorization(
        wrap(from_ints({{1}})), {from_ints({{-1}}), from_ints({{-1}}), 1});
    CHECK_FALSE(bad.ok);
    CHECK(bad.detail.find("nonnegativity") != std::string::npos);
  }
  CHECK_THROWS_AS(
      validate_factorization(S, {RatMatrix::identity(3), RatMatrix::identity(3), 3}),
      DimensionError);
}

TEST_CASE("normalize fixtures") {
  {
    // Forced scaling interval [v/delta, delta/u] = [2,2].
    Factorization F{from_ints({{1}}), from_ints({{4, 0}}), 1};
    const Factorization N = normalize(F, Int(2));
    CHECK(N.U == from_ints({{2}}));
    CHECK(N.V == from_ints({{2, 0}}));
  }
  {
    // A dead column of U zeroes the matching row of V.
    Factorization F{from_ints({{0}, {0}}), from_ints({{5, 5}}), 1};
    const Factorization N = normalize(F, Int(2));
    CHECK(N.V == from_ints({{0, 0}}));
  }
  {
    Factorization F{from_ints({{2}}), from_ints({{1, 1}}), 1};
    const Factorization N = normalize(F, Int(2));
    CHECK(N.U == F.U);
    CHECK(N.V == F.V);
  }
  {
    Factorization F{from_ints({{5}}), from_ints({{5}}), 1};
    CHECK_THROWS_AS(normalize(F, Int(2)), PreconditionError);
  }
}

TEST_CASE("normalize restores bounds for random rescalings") {
  // Random positive column/row rescalings of trivial factorizations keep
  // the product but wreck the bounds; normalize must restore them.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<std::uint64_t> mask3(1, 255);
  int done = 0;
  while (done < 100) {
    const int n = 1 + int(done % 3);
    const std::uint64_t cap = (std::uint64_t(1) << (std::uint64_t(1) << n)) - 1;
    const VertexSet X = vertex_set_from_mask(n, 1 + (mask3(rng) % cap));
    const SlackMatrix S = slack_of(X);
    Factorization F =
        trivial_factorization(S, done % 2 == 0 ? Side::Left : Side::Right);
    for (int l = 0; l < F.r; ++l) {
      const Rat t(num(rng), den(rng));
      for (int i = 0; i < F.U.rows; ++i) F.U.at(i, l) *= t;
      for (int j = 0; j < F.V.cols; ++j) F.V.at(l, j) /= t;
    }
    const Int delta = delta_int(n);
    const Factorization N = normalize(F, delta);
    CHECK(mul(N.U, N.V) == mul(F.U, F.V));
    CHECK(linf_norm(N.U) <= Rat(delta));
    CHECK(linf_norm(N.V) <= Rat(delta));
    CHECK(validate_factorization(S, N).ok);
    ++done;
  }
}

TEST_CASE("extension fixtures on the segment") {
  const VertexSet X = make_vertex_set(1, {{0}, {1}});
  const HPolytope P = hull(X);
  const ExtendedFormulation EF =
      build_extension(P, X, trivial_factorization(slack_of(X), Side::Left));
  CHECK(EF.size() == 2);

  // Q = { x + y1 = 1, -x + y2 = 0, y >= 0 } in variables (x, y1, y2).
  const LinearSystem sys = EF.to_system();
  REQUIRE(sys.num_vars == 3);
  REQUIRE(sys.constraints.size() == 4);
  CHECK(sys.constraints[0].coeffs == RatVector{Rat(1), Rat(1), Rat(0)});
  CHECK(sys.constraints[0].rel == Relation::Eq);
  CHECK(sys.constraints[0].rhs == 1);
  CHECK(sys.constraints[1].coeffs == RatVector{Rat(-1), Rat(0), Rat(1)});
  CHECK(sys.constraints[1].rel == Relation::Eq);
  CHECK(sys.constraints[1].rhs == 0);

  const CertificateReport report = verify_extension(EF, X);
  CHECK(report.all_ok());
}

TEST_CASE("corrupted factorizations are rejected or fail verification") {
  const VertexSet X = make_vertex_set(2, {{0, 0}, {1, 0}, {0, 1}});
  const HPolytope P = hull(X);
  Factorization F = trivial_factorization(slack_of(X), Side::Left);
  F.U.at(0, 0) += 1;
  CHECK_THROWS_AS(build_extension(P, X, F), PreconditionError);

  // Sneak the corrupted system past validation to see the witness check fail.
  ExtendedFormulation EF{P, F};
  const CertificateReport report = verify_extension(EF, X);
  CHECK_FALSE(report.all_ok());
  bool vertex_failure = false;
  for (const auto& c : report.items)
    if (!c.ok && c.name.rfind("vertex_witness", 0) == 0) vertex_failure = true;
  CHECK(vertex_failure);
}

TEST_CASE("extensions verify for both trivial factorizations at n <= 2") {
  for (int n = 1; n <= 2; ++n) {
    const std::uint64_t num_sets = (std::uint64_t(1) << (std::uint64_t(1) << n)) - 1;
    for (std::uint64_t mask = 1; mask <= num_sets; ++mask) {
      const VertexSet X = vertex_set_from_mask(n, mask);
      const HPolytope P = hull(X);
      const SlackMatrix S = slack_matrix(P, X);
      for (const Side side : {Side::Left, Side::Right}) {
        const ExtendedFormulation EF =
            build_extension(P, X, trivial_factorization(S, side));
        CHECK(verify_extension(EF, X).all_ok());
      }
    }
  }
}

TEST_CASE("nmf heuristic fixtures") {
  {
    const auto F = nmf_heuristic(wrap(RatMatrix::identity(2)), 2, 5, 300);
    REQUIRE(F.has_value());
    CHECK(validate_factorization(wrap(RatMatrix::identity(2)), *F).ok);
  }
  {
    // Width 2 cannot reach the 3x3 identity: no support pattern works,
    // so the nonnegative rank is 3.
    CHECK_FALSE(oracles::identity_support_feasible(3, 2));
    CHECK_FALSE(nmf_heuristic(wrap(RatMatrix::identity(3)), 2, 5, 300).has_value());
  }
  {
    const SlackMatrix S = wrap(from_ints({{1, 1}, {1, 1}}));
    const auto F = nmf_heuristic(S, 1, 5, 300);
    REQUIRE(F.has_value());
    CHECK(validate_factorization(S, *F).ok);
  }
}

TEST_CASE("nmf heuristic output always validates") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint64_t> mask3(1, 255);
  for (int trial = 0; trial < 10; ++trial) {
    const VertexSet X = vertex_set_from_mask(3, mask3(rng));
    const SlackMatrix S = slack_of(X);
    const int r = std::min(S.f, S.v);
    const auto F = nmf_heuristic(S, r, 7 + trial, 250);
    if (F) CHECK(validate_factorization(S, *F).ok);
  }
}
