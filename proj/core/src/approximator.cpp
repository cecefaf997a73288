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

#include "xclab/approximator.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "xclab/lp.hpp"

namespace xclab {

Rat compute_delta(int n, const Int& delta, const Rat& epsilon) {
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
  if (n < 1) throw DomainError("compute_delta requires n >= 1");
  const Int ndelta = Int(n) * delta;
  const Rat first = Rat(1) / (Rat(2) * Rat(pow(ndelta, unsigned(2 * n + 2))));
  const Rat second = epsilon / (Rat(n) * Rat(pow(ndelta, unsigned(n))));
  return std::min(first, second);
}

LinearSystem ApproxExtension::to_system() const {
  LinearSystem sys(n + r);
  for (int i = 0; i < num_rows(); ++i) {
    RatVector row(n + r);
    for (int j = 0; j < n; ++j) row[j] = B.at(i, j);
    for (int l = 0; l < r; ++l) row[n + l] = C.at(i, l);
    sys.add(std::move(row), Relation::LessEq, d[i]);
  }
  return sys;
}

ApproxExtension build_approx(const VertexSet& X,
                             const std::optional<Factorization>& F,
                             const Rat& epsilon) {
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

  ApproxExtension Q;
  Q.n = n;
  Q.r = r;
  Q.epsilon = epsilon;
  Q.delta = P.delta;
  Q.delta_small = compute_delta(n, P.delta, epsilon);
  Q.grid = Q.delta_small / (Rat(4) * r * (n + r) * Rat(P.delta));
  Q.tol = Q.delta_small / (Rat(4) * (n + r));
  Q.P = P;
  Q.witnesses = fact.V;

  RatMatrix side_by_side(f, n + r);
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < n; ++j) side_by_side.at(i, j) = Rat(P.A[i][j]);
    for (int l = 0; l < r; ++l) side_by_side.at(i, n + l) = fact.U.at(i, l);
  }
  const RowSelection sel = select_maxvol_rows(side_by_side);

  RatMatrix u_selected(sel.k, r);
  for (int s = 0; s < sel.k; ++s)
    for (int l = 0; l < r; ++l)
      u_selected.at(s, l) = fact.U.at(sel.indices[s], l);
  const RatMatrix u_rounded = grid_round_down(u_selected, Q.grid);

  // Padded band data.
  std::vector<RatVector> arow(n + r, RatVector(n));
  std::vector<RatVector> urow(n + r, RatVector(r));
  RatVector brow(n + r);
  for (int s = 0; s < sel.k; ++s) {
    const int src = sel.indices[s];
    for (int j = 0; j < n; ++j) arow[s][j] = Rat(P.A[src][j]);
    for (int l = 0; l < r; ++l) urow[s][l] = u_rounded.at(s, l);
    brow[s] = Rat(P.b[src]);
  }

  const int rows = 2 * (n + r) + 2 * r;
  Q.B = RatMatrix(rows, n);
  Q.C = RatMatrix(rows, r);
  Q.d.assign(rows, Rat(0));
  for (int i = 0; i < n + r; ++i) {
    for (int j = 0; j < n; ++j) {
      Q.B.at(i, j) = arow[i][j];
      Q.B.at(n + r + i, j) = -arow[i][j];
    }
    for (int l = 0; l < r; ++l) {
      Q.C.at(i, l) = urow[i][l];
      Q.C.at(n + r + i, l) = -urow[i][l];
    }
    Q.d[i] = brow[i] + Q.tol;
    Q.d[n + r + i] = -brow[i] + Q.tol;
  }
  for (int l = 0; l < r; ++l) {
    Q.C.at(2 * (n + r) + l, l) = 1;
    Q.d[2 * (n + r) + l] = Rat(P.delta);
    Q.C.at(2 * (n + r) + r + l, l) = -1;
    Q.d[2 * (n + r) + r + l] = 0;
  }
  return Q;
}

std::vector<RatVector> objective_battery(const HPolytope& P, std::uint64_t seed,
                                         int random_count) {
  std::vector<RatVector> out;
  for (int i = 0; i < P.num_rows(); ++i) out.push_back(P.row_rat(i));
  for (int j = 0; j < P.n; ++j) {
    RatVector plus(P.n), minus(P.n);
    plus[j] = 1;
    minus[j] = -1;
    out.push_back(std::move(plus));
    out.push_back(std::move(minus));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 8);
  for (int k = 0; k < random_count; ++k) {
    RatVector c(P.n);
    for (int j = 0; j < P.n; ++j) c[j] = Rat(num(rng), den(rng));
    out.push_back(std::move(c));
  }
  return out;
}

CertificateReport verify_sandwich(const ApproxExtension& Q, const VertexSet& X,
                                  const std::vector<RatVector>& objectives) {
  CertificateReport report;
  const int n = Q.n;
  const int r = Q.r;

  // (a) vertex containment with the factorization witness.
  for (int j = 0; j < X.size(); ++j) {
    RatVector point(n + r);
    for (int c = 0; c < n; ++c) point[c] = X.vertices[j][c];
    for (int l = 0; l < r; ++l) point[n + l] = Q.witnesses.at(l, j);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < Q.num_rows(); ++i) {
      Rat lhs = 0;
      for (int c = 0; c < n; ++c)
        if (Q.B.at(i, c) != 0) lhs += Q.B.at(i, c) * point[c];
      for (int l = 0; l < r; ++l)
        if (Q.C.at(i, l) != 0) lhs += Q.C.at(i, l) * point[n + l];
      if (lhs > Q.d[i]) {
        ok = false;
        detail = "row " + std::to_string(i + 1) + " violated";
        break;
      }
    }
    report.add("vertex_in_Q[" + std::to_string(j + 1) + "]", ok, detail);
  }

  const LinearSystem sys = Q.to_system();

  // (b) facet lift: max A_l x over Q stays within b_l + delta_small.
  for (int i = 0; i < Q.P.num_rows(); ++i) {
    RatVector objective(n + r);
    for (int j = 0; j < n; ++j) objective[j] = Rat(Q.P.A[i][j]);
    const LpResult res = lp_optimize(objective, sys, Sense::Maximize);
    const Rat limit = Rat(Q.P.b[i]) + Q.delta_small;
    const bool ok = res.feasible() && res.optimum && *res.optimum <= limit;
    std::string detail;
    if (!res.feasible())
      detail = "lp status " + to_string(res.status);
    else if (res.optimum && *res.optimum > limit)
      detail = "max " + rat_to_string(*res.optimum) + " exceeds " +
               rat_to_string(limit);
    report.add("facet_lift[" + std::to_string(i + 1) + "]", ok, detail);
  }

  // (c) objective gap, squared to stay rational.
  const Rat eps_sq = Q.epsilon * Q.epsilon;
  for (std::size_t oi = 0; oi < objectives.size(); ++oi) {
    const RatVector& c = objectives[oi];
    if (int(c.size()) != n) throw DimensionError("objective of wrong arity");
    RatVector lifted(n + r);
    for (int j = 0; j < n; ++j) lifted[j] = c[j];
    const LpResult res = lp_optimize(lifted, sys, Sense::Maximize);
    bool ok = false;
    std::string detail;
    if (!res.feasible() || !res.optimum) {
      detail = "lp status " + to_string(res.status);
    } else {
      Rat best_vertex;
      for (int j = 0; j < X.size(); ++j) {
        Rat val = 0;
        for (int col = 0; col < n; ++col)
          if (X.vertices[j][col]) val += c[col];
        if (j == 0 || val > best_vertex) best_vertex = std::move(val);
      }
      const Rat gap = *res.optimum - best_vertex;
      Rat norm_sq = 0;
      for (const Rat& x : c) norm_sq += x * x;
      ok = gap <= 0 || gap * gap <= eps_sq * norm_sq;
      if (!ok)
        detail = "gap " + rat_to_string(gap) + " exceeds epsilon * |c|_2";
    }
    report.add("objective_gap[" + std::to_string(oi + 1) + "]", ok, detail);
  }
  return report;
}

std::size_t max_entry_bits(const ApproxExtension& Q) {
  std::size_t best = 0;
  auto update = [&best](const Rat& x) {
    best = std::max(best, bit_length(Int(numerator(x))));
    best = std::max(best, bit_length(Int(denominator(x))));
  };
  for (const Rat& x : Q.B.entries) update(x);
  for (const Rat& x : Q.C.entries) update(x);
  for (const Rat& x : Q.d) update(x);
  return best;
}

}  // namespace xclab
