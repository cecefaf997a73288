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

#include "xclab/factorization.hpp"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace xclab {

Factorization trivial_factorization(const SlackMatrix& S, Side side) {
  Factorization F;
  if (side == Side::Left) {
    F.U = S.S;
    F.V = RatMatrix::identity(S.v);
    F.r = S.v;
  } else {
    F.U = RatMatrix::identity(S.f);
    F.V = S.S;
    F.r = S.f;
  }
  return F;
}

ValidationResult validate_factorization(const SlackMatrix& S,
                                        const Factorization& F) {
  if (F.U.rows != S.f || F.U.cols != F.r || F.V.rows != F.r || F.V.cols != S.v)
    throw DimensionError("factorization shape does not match slack matrix");
  for (int i = 0; i < F.U.rows; ++i)
    for (int l = 0; l < F.U.cols; ++l)
      if (F.U.at(i, l) < 0)
        return {false, "nonnegativity violation in U at entry (" +
                           std::to_string(i + 1) + "," + std::to_string(l + 1) + ")"};
  for (int l = 0; l < F.V.rows; ++l)
    for (int j = 0; j < F.V.cols; ++j)
      if (F.V.at(l, j) < 0)
        return {false, "nonnegativity violation in V at entry (" +
                           std::to_string(l + 1) + "," + std::to_string(j + 1) + ")"};
  const RatMatrix prod = mul(F.U, F.V);
  for (int i = 0; i < S.f; ++i)
    for (int j = 0; j < S.v; ++j)
      if (prod.at(i, j) != S.S.at(i, j))
        return {false, "product differs from S at entry (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
  return {};
}

Factorization normalize(const Factorization& F, const Int& delta) {
  Factorization out = F;
  const Rat bound(delta);
  const Rat bound_sq = bound * bound;
  for (int l = 0; l < out.r; ++l) {
    Rat unorm = 0, vnorm = 0;
    for (int i = 0; i < out.U.rows; ++i) {
      Rat a = abs(out.U.at(i, l));
      if (a > unorm) unorm = std::move(a);
    }
    for (int j = 0; j < out.V.cols; ++j) {
      Rat a = abs(out.V.at(l, j));
      if (a > vnorm) vnorm = std::move(a);
    }
    if (unorm == 0) {
      for (int j = 0; j < out.V.cols; ++j) out.V.at(l, j) = 0;
      continue;
    }
    if (vnorm == 0) {
      for (int i = 0; i < out.U.rows; ++i) out.U.at(i, l) = 0;
      continue;
    }
    if (unorm <= bound && vnorm <= bound) continue;
    if (unorm * vnorm > bound_sq)
      throw PreconditionError("column " + std::to_string(l + 1) +
                              " cannot be scaled into the delta box");
    // Any scale in [vnorm/delta, delta/unorm] works; vnorm/delta is the
    // canonical pick and lands V_l exactly on the bound.
    const Rat lambda = vnorm / bound;
    for (int i = 0; i < out.U.rows; ++i) out.U.at(i, l) *= lambda;
    for (int j = 0; j < out.V.cols; ++j) out.V.at(l, j) /= lambda;
  }
  return out;
}

LinearSystem ExtendedFormulation::to_system() const {
  const int n = P.n;
  const int r = F.r;
  LinearSystem sys(n + r);
  for (int i = 0; i < P.num_rows(); ++i) {
    RatVector row(n + r);
    for (int j = 0; j < n; ++j) row[j] = Rat(P.A[i][j]);
    for (int l = 0; l < r; ++l) row[n + l] = F.U.at(i, l);
    sys.add(std::move(row), Relation::Eq, Rat(P.b[i]));
  }
  for (int l = 0; l < r; ++l) sys.add_bound(n + l, 1, Relation::GreaterEq, 0);
  return sys;
}

ExtendedFormulation build_extension(const HPolytope& P, const VertexSet& X,
                                    const Factorization& F) {
  const SlackMatrix S = slack_matrix(P, X);
  const ValidationResult check = validate_factorization(S, F);
  if (!check.ok)
    throw PreconditionError("factorization rejected: " + check.detail);
  return {P, F};
}

CertificateReport verify_extension(const ExtendedFormulation& EF,
                                   const VertexSet& X) {
  CertificateReport report;
  const HPolytope& P = EF.P;
  const int n = P.n;
  const int r = EF.F.r;

  for (int j = 0; j < X.size(); ++j) {
    const RatVector y = EF.F.V.col(j);
    bool ok = true;
    std::string detail;
    for (int l = 0; l < r && ok; ++l)
      if (y[l] < 0) {
        ok = false;
        detail = "witness has negative coordinate y" + std::to_string(l + 1);
      }
    RatVector x(n);
    for (int c = 0; c < n; ++c) x[c] = X.vertices[j][c];
    for (int i = 0; i < P.num_rows() && ok; ++i) {
      Rat lhs = dot(P.row_rat(i), x);
      for (int l = 0; l < r; ++l)
        if (EF.F.U.at(i, l) != 0) lhs += EF.F.U.at(i, l) * y[l];
      if (lhs != Rat(P.b[i])) {
        ok = false;
        detail = "equation " + std::to_string(i + 1) + " not met exactly";
      }
    }
    report.add("vertex_witness[" + std::to_string(j + 1) + "]", ok, detail);
  }

  const LinearSystem sys = EF.to_system();
  for (int i = 0; i < P.num_rows(); ++i) {
    RatVector objective(n + r);
    for (int j = 0; j < n; ++j) objective[j] = Rat(P.A[i][j]);
    const LpResult res = lp_optimize(objective, sys, Sense::Maximize);
    const bool ok = res.feasible() && res.optimum && *res.optimum == Rat(P.b[i]);
    std::string detail;
    if (!res.feasible())
      detail = "lp status " + to_string(res.status);
    else if (res.optimum && *res.optimum != Rat(P.b[i]))
      detail = "max is " + rat_to_string(*res.optimum) + ", expected " +
               rat_to_string(Rat(P.b[i]));
    report.add("facet_max[" + std::to_string(i + 1) + "]", ok, detail);
  }
  return report;
}

namespace {

// Exact recovery of the right factor: each column of S solved as an LP
// feasibility problem over y >= 0 with U fixed.
std::optional<RatMatrix> solve_right_factor(const RatMatrix& U,
                                            const SlackMatrix& S) {
  RatMatrix V(U.cols, S.v);
  for (int j = 0; j < S.v; ++j) {
    LinearSystem sys(U.cols);
    for (int i = 0; i < U.rows; ++i) {
      RatVector row(U.cols);
      for (int l = 0; l < U.cols; ++l) row[l] = U.at(i, l);
      sys.add(std::move(row), Relation::Eq, S.S.at(i, j));
    }
    for (int l = 0; l < U.cols; ++l) sys.add_bound(l, 1, Relation::GreaterEq, 0);
    const LpResult res = lp_feasible(sys);
    if (!res.feasible()) return std::nullopt;
    for (int l = 0; l < U.cols; ++l) V.at(l, j) = (*res.witness)[l];
  }
  return V;
}

RatMatrix snap_nonnegative(const std::vector<std::vector<double>>& M, int rows,
                           int cols, long den) {
  RatMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double scaled = M[i][j] * double(den);
      long num = std::lround(scaled);
      if (num < 0) num = 0;
      out.at(i, j) = Rat(num, den);
    }
  return out;
}

}  // namespace

std::optional<Factorization> nmf_heuristic(const SlackMatrix& S, int r,
                                           std::uint64_t seed, int iterations) {
  if (r < 1) return std::nullopt;
  if (r < rank(S.S)) return std::nullopt;  // rk_+ >= rk: width r is impossible
  const int f = S.f, v = S.v;

  if (S.S.is_zero()) {
    Factorization F{RatMatrix(f, r), RatMatrix(r, v), r};
    return F;
  }

  std::vector<std::vector<double>> target(f, std::vector<double>(v));
  double scale = 0;
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < v; ++j) {
      target[i][j] = double(numerator(S.S.at(i, j))) /
                     double(denominator(S.S.at(i, j)));
      scale = std::max(scale, target[i][j]);
    }
  if (scale == 0) scale = 1;

  static const long kDenominators[] = {1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64};
  constexpr int kRestarts = 4;

  for (int restart = 0; restart < kRestarts; ++restart) {
    std::mt19937_64 rng(seed + std::uint64_t(restart) * 0x9E3779B97F4A7C15ull);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    std::vector<std::vector<double>> U(f, std::vector<double>(r));
    std::vector<std::vector<double>> V(r, std::vector<double>(v));
    for (auto& row : U)
      for (double& x : row) x = unif(rng) * scale;
    for (auto& row : V)
      for (double& x : row) x = unif(rng);

    // Multiplicative updates for the Frobenius objective.
    const double eps = 1e-12;
    for (int it = 0; it < iterations; ++it) {
      for (int i = 0; i < f; ++i)
        for (int l = 0; l < r; ++l) {
          double num = 0, den = 0;
          for (int j = 0; j < v; ++j) {
            double uv = 0;
            for (int k = 0; k < r; ++k) uv += U[i][k] * V[k][j];
            num += target[i][j] * V[l][j];
            den += uv * V[l][j];
          }
          U[i][l] *= num / (den + eps);
        }
      for (int l = 0; l < r; ++l)
        for (int j = 0; j < v; ++j) {
          double num = 0, den = 0;
          for (int i = 0; i < f; ++i) {
            double uv = 0;
            for (int k = 0; k < r; ++k) uv += U[i][k] * V[k][j];
            num += U[i][l] * target[i][j];
            den += U[i][l] * uv;
          }
          V[l][j] *= num / (den + eps);
        }
    }

    for (long den : kDenominators) {
      // Snap U and recover V exactly; then the mirrored attempt.
      RatMatrix U_rat = snap_nonnegative(U, f, r, den);
      if (auto V_exact = solve_right_factor(U_rat, S)) {
        Factorization F{std::move(U_rat), std::move(*V_exact), r};
        if (validate_factorization(S, F).ok) return F;
      }
      RatMatrix V_rat = snap_nonnegative(V, r, v, den);
      SlackMatrix S_t{S.S.transpose(), v, f};
      if (auto U_exact = solve_right_factor(V_rat.transpose(), S_t)) {
        Factorization F{U_exact->transpose(), std::move(V_rat), r};
        if (validate_factorization(S, F).ok) return F;
      }
    }
  }
  return std::nullopt;
}

}  // namespace xclab
