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

#include <benchmark/benchmark.h>

#include "xclab/approximator.hpp"
#include "xclab/counting.hpp"
#include "xclab/discretizer.hpp"
#include "xclab/lp.hpp"
#include "xclab/matroid.hpp"

namespace {

using namespace xclab;

void BM_HullCube3(benchmark::State& state) {
  const VertexSet X = vertex_set_from_mask(3, 255);
  for (auto _ : state) benchmark::DoNotOptimize(hull(X));
}
BENCHMARK(BM_HullCube3);

void BM_DiscretizeRoundtrip(benchmark::State& state) {
  const VertexSet X = vertex_set_from_mask(3, std::uint64_t(state.range(0)));
  for (auto _ : state) {
    const DiscretizedSystem D = discretize(X);
    benchmark::DoNotOptimize(reconstruct(D));
  }
}
BENCHMARK(BM_DiscretizeRoundtrip)->Arg(0b10110101)->Arg(255);

void BM_SimplexTriangleLift(benchmark::State& state) {
  const VertexSet X = vertex_set_from_mask(2, 0b0111);
  const HPolytope P = hull(X);
  const SlackMatrix S = slack_matrix(P, X);
  const ExtendedFormulation EF =
      build_extension(P, X, trivial_factorization(S, Side::Left));
  const LinearSystem sys = EF.to_system();
  RatVector c(sys.num_vars);
  c[0] = 1;
  c[1] = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(lp_optimize(c, sys, Sense::Maximize));
}
BENCHMARK(BM_SimplexTriangleLift);

void BM_ApproxBuild(benchmark::State& state) {
  const VertexSet X = vertex_set_from_mask(2, 0b1011);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_approx(X, {}, Rat(1, 10)));
}
BENCHMARK(BM_ApproxBuild);

void BM_CountingSweep(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 1; n <= 64; ++n)
      benchmark::DoNotOptimize(certified_xc_lower_bound(n));
}
BENCHMARK(BM_CountingSweep);

void BM_MatroidPolytopeK4(benchmark::State& state) {
  const Matroid k4 =
      graphic_matroid(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(matroid_polytope(k4));
}
BENCHMARK(BM_MatroidPolytopeK4);

}  // namespace

BENCHMARK_MAIN();
