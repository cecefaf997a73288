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

#ifndef XCLAB_DISCRETIZER_HPP_
#define XCLAB_DISCRETIZER_HPP_

#include <optional>
#include <vector>

#include "xclab/factorization.hpp"
#include "xclab/matrix.hpp"
#include "xclab/polytope.hpp"

namespace xclab {

// Independent row subset of locally maximal squared volume. Local
// maximality under single-row exchange is what bounds every Cramer
// coefficient of a spanned row by 1 in absolute value.
struct RowSelection {
  std::vector<int> indices;  // ascending
  int k = 0;
  Rat volume_sq;
};

/// Greedy construction plus single-exchange local search, deterministic
/// scan order, ties to the smallest index. A zero matrix yields the empty
/// selection with k = 0.
RowSelection select_maxvol_rows(const RatMatrix& M);

/// Entrywise largest multiple of q that is <= the entry. Entries must be
/// nonnegative and q > 0.
RatMatrix grid_round_down(const RatMatrix& U, const Rat& q);

// The rounded subsystem (Abar, Ubar, bbar): exactly n+r rows, zero-padded
// beyond the selected ones. Every Ubar entry is a nonnegative multiple of
// the grid spacing q = 1/(4 r (n+r) delta) and at most delta.
struct DiscretizedSystem {
  int n = 0;
  int r = 0;
  Int delta;
  std::vector<IntVector> Abar;
  RatMatrix Ubar;
  IntVector bbar;
  Rat q;
  Rat tol;  // membership band, 1/(4(n+r)) unless overridden
};

/// The discretization map: hull, normalized factorization (trivial left
/// one unless F is supplied), locally max-volume row selection over
/// [A | U], grid rounding, zero padding. Canonical choices throughout make
/// this a well-defined function of X.
DiscretizedSystem discretize(const VertexSet& X,
                             const std::optional<Factorization>& F = {},
                             const std::optional<Rat>& tol_override = {});

/// True iff some y in [0, delta]^r puts Abar x + Ubar y within the
/// tolerance band around bbar; decided by exact LP.
bool membership_test(const DiscretizedSystem& D, const std::vector<int>& x);

/// The certifying y for members, nullopt for non-members.
std::optional<RatVector> membership_witness(const DiscretizedSystem& D,
                                            const std::vector<int>& x);

/// { x in {0,1}^n : membership_test(D, x) }; equals the original X for
/// every system produced by discretize.
VertexSet reconstruct(const DiscretizedSystem& D);

/// Exact min over y in [0, delta]^r of the max deviation |Abar x + Ubar y
/// - bbar|_inf at a non-member x; at least 1/(2(n+r)). Throws
/// PreconditionError if x is a member.
Rat separation_margin(const DiscretizedSystem& D, const std::vector<int>& x);

}  // namespace xclab

#endif  // XCLAB_DISCRETIZER_HPP_
