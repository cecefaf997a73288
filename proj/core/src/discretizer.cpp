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

#include "xclab/discretizer.hpp"

#include <algorithm>
#include <utility>

#include "xclab/lp.hpp"

namespace xclab {

namespace {

Rat selection_volume_sq(const std::vector<RatVector>& rows,
                        const std::vector<int>& picked) {
  std::vector<RatVector> chosen;
  chosen.reserve(picked.size());
  for (int i : picked) chosen.push_back(rows[i]);
  return gram_volume_sq(chosen);
}

}  // namespace

RowSelection select_maxvol_rows(const RatMatrix& M) {
  std::vector<RatVector> rows;
  rows.reserve(M.rows);
  for (int i = 0; i < M.rows; ++i) rows.push_back(M.row(i));
  const int k = rank(M);

  RowSelection sel;
  sel.k = k;
  sel.volume_sq = k == 0 ? Rat(0) : Rat(1);
  if (k == 0) return sel;

  // Greedy: extend by the row with the largest resulting volume, ties to
  // the smallest index.
  std::vector<bool> in_set(M.rows, false);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    Rat best_vol = 0;
    for (int cand = 0; cand < M.rows; ++cand) {
      if (in_set[cand]) continue;
      std::vector<int> trial = sel.indices;
      trial.push_back(cand);
      Rat vol = selection_volume_sq(rows, trial);
      if (vol > best_vol) {
        best = cand;
        best_vol = std::move(vol);
      }
    }
    if (best < 0) throw InternalError("rank promises another independent row");
    sel.indices.push_back(best);
    in_set[best] = true;
    sel.volume_sq = std::move(best_vol);
    std::sort(sel.indices.begin(), sel.indices.end());
  }

  // Single-exchange local search; each accepted swap strictly increases
  // the squared volume, so this terminates.
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t pos = 0; pos < sel.indices.size() && !improved; ++pos) {
      for (int cand = 0; cand < M.rows && !improved; ++cand) {
        if (in_set[cand]) continue;
        std::vector<int> trial = sel.indices;
        trial[pos] = cand;
        Rat vol = selection_volume_sq(rows, trial);
        if (vol > sel.volume_sq) {
          in_set[sel.indices[pos]] = false;
          in_set[cand] = true;
          sel.indices = std::move(trial);
          std::sort(sel.indices.begin(), sel.indices.end());
          sel.volume_sq = std::move(vol);
          improved = true;
        }
      }
    }
  }
  return sel;
}

RatMatrix grid_round_down(const RatMatrix& U, const Rat& q) {
  if (q <= 0) throw PreconditionError("grid spacing must be positive");
  RatMatrix out(U.rows, U.cols);
  for (int i = 0; i < U.rows; ++i)
    for (int j = 0; j < U.cols; ++j) {
      const Rat& e = U.at(i, j);
      if (e < 0) throw PreconditionError("grid_round_down needs nonnegative entries");
      out.at(i, j) = Rat(rat_floor(e / q)) * q;
    }
  return out;
}

namespace {

DiscretizedSystem discretize_impl(const VertexSet& X,
                                  const std::optional<Factorization>& F,
                                  const std::optional<Rat>& tol_override) {
  const HPolytope P = hull(X);
  const SlackMatrix S = slack_matrix(P, X);
  Factorization fact = F ? *F : trivial_factorization(S, Side::Left);
  if (F) {
    const ValidationResult check = validate_factorization(S, *F);
    if (!check.ok)
      throw PreconditionError("factorization rejected: " + check.detail);
  }
  fact = normalize(fact, P.delta);

  const int n = X.n;
  const int r = fact.r;
  const int f = P.num_rows();

  RatMatrix side_by_side(f, n + r);
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < n; ++j) side_by_side.at(i, j) = Rat(P.A[i][j]);
    for (int l = 0; l < r; ++l) side_by_side.at(i, n + l) = fact.U.at(i, l);
  }
  const RowSelection sel = select_maxvol_rows(side_by_side);

  DiscretizedSystem D;
  D.n = n;
  D.r = r;
  D.delta = P.delta;
  D.q = Rat(1) / (Rat(4) * r * (n + r) * Rat(P.delta));
  D.tol = tol_override ? *tol_override : Rat(1) / (Rat(4) * (n + r));

  RatMatrix u_selected(sel.k, r);
  for (int s = 0; s < sel.k; ++s)
    for (int l = 0; l < r; ++l)
      u_selected.at(s, l) = fact.U.at(sel.indices[s], l);
  const RatMatrix u_rounded = grid_round_down(u_selected, D.q);

  D.Abar.assign(n + r, IntVector(n, Int(0)));
  D.bbar.assign(n + r, Int(0));
  D.Ubar = RatMatrix(n + r, r);
  for (int s = 0; s < sel.k; ++s) {
    const int src = sel.indices[s];
    D.Abar[s] = P.A[src];
    D.bbar[s] = P.b[src];
    for (int l = 0; l < r; ++l) D.Ubar.at(s, l) = u_rounded.at(s, l);
  }
  return D;
}

// Membership LP over y: the tolerance band rows plus the y box.
LinearSystem band_system(const DiscretizedSystem& D, const std::vector<int>& x) {
  if (int(x.size()) != D.n) throw DimensionError("point has wrong dimension");
  LinearSystem sys(D.r);
  const int m = int(D.Abar.size());
  for (int i = 0; i < m; ++i) {
    Rat ax_minus_b = -Rat(D.bbar[i]);
    for (int j = 0; j < D.n; ++j)
      if (x[j]) ax_minus_b += Rat(D.Abar[i][j]);
    RatVector urow(D.r);
    for (int l = 0; l < D.r; ++l) urow[l] = D.Ubar.at(i, l);
    RatVector neg = urow;
    for (Rat& c : neg) c = -c;
    sys.add(std::move(urow), Relation::LessEq, D.tol - ax_minus_b);
    sys.add(std::move(neg), Relation::LessEq, D.tol + ax_minus_b);
  }
  for (int l = 0; l < D.r; ++l) {
    sys.add_bound(l, 1, Relation::GreaterEq, 0);
    sys.add_bound(l, 1, Relation::LessEq, Rat(D.delta));
  }
  return sys;
}

}  // namespace

DiscretizedSystem discretize(const VertexSet& X,
                             const std::optional<Factorization>& F,
                             const std::optional<Rat>& tol_override) {
  return discretize_impl(X, F, tol_override);
}

bool membership_test(const DiscretizedSystem& D, const std::vector<int>& x) {
  return lp_feasible(band_system(D, x)).feasible();
}

std::optional<RatVector> membership_witness(const DiscretizedSystem& D,
                                            const std::vector<int>& x) {
  LpResult res = lp_feasible(band_system(D, x));
  if (!res.feasible()) return std::nullopt;
  return std::move(*res.witness);
}

VertexSet reconstruct(const DiscretizedSystem& D) {
  if (D.n < 1 || D.n > 20)
    throw DomainError("reconstruction enumerates {0,1}^n, needs 1 <= n <= 20");
  std::vector<std::vector<int>> members;
  const std::uint64_t npoints = std::uint64_t(1) << D.n;
  for (std::uint64_t idx = 0; idx < npoints; ++idx) {
    std::vector<int> x = vertex_from_index(D.n, idx);
    if (membership_test(D, x)) members.push_back(std::move(x));
  }
  return make_vertex_set(D.n, std::move(members));
}

Rat separation_margin(const DiscretizedSystem& D, const std::vector<int>& x) {
  if (membership_test(D, x))
    throw PreconditionError("separation margin is defined for non-members");
  // Variables (y, t): minimize t subject to -t <= Abar x + Ubar y - bbar <= t
  // and the y box.
  const int m = int(D.Abar.size());
  LinearSystem sys(D.r + 1);
  for (int i = 0; i < m; ++i) {
    Rat ax_minus_b = -Rat(D.bbar[i]);
    for (int j = 0; j < D.n; ++j)
      if (x[j]) ax_minus_b += Rat(D.Abar[i][j]);
    RatVector upper(D.r + 1);
    for (int l = 0; l < D.r; ++l) upper[l] = D.Ubar.at(i, l);
    upper[D.r] = -1;
    RatVector lower(D.r + 1);
    for (int l = 0; l < D.r; ++l) lower[l] = -D.Ubar.at(i, l);
    lower[D.r] = -1;
    sys.add(std::move(upper), Relation::LessEq, -ax_minus_b);
    sys.add(std::move(lower), Relation::LessEq, ax_minus_b);
  }
  for (int l = 0; l < D.r; ++l) {
    sys.add_bound(l, 1, Relation::GreaterEq, 0);
    sys.add_bound(l, 1, Relation::LessEq, Rat(D.delta));
  }
  RatVector objective(D.r + 1);
  objective[D.r] = 1;
  const LpResult res = lp_optimize(objective, sys, Sense::Minimize);
  if (!res.feasible() || !res.optimum)
    throw InternalError("margin LP is always feasible for bounded y");
  return *res.optimum;
}

}  // namespace xclab
