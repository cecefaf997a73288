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

#include "xclab/lp.hpp"

#include <cstddef>
#include <utility>

namespace xclab {

void LinearSystem::add(RatVector coeffs, Relation rel, Rat rhs) {
  if (int(coeffs.size()) != num_vars)
    throw DimensionError("constraint arity does not match num_vars");
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearSystem::add_bound(int var, const Rat& coeff, Relation rel,
                             const Rat& rhs) {
  RatVector c(num_vars);
  c.at(var) = coeff;
  add(std::move(c), rel, rhs);
}

bool LinearSystem::satisfied_by(const RatVector& point) const {
  if (int(point.size()) != num_vars) return false;
  for (const auto& con : constraints) {
    Rat lhs = 0;
    for (int j = 0; j < num_vars; ++j)
      if (con.coeffs[j] != 0) lhs += con.coeffs[j] * point[j];
    switch (con.rel) {
      case Relation::LessEq:
        if (lhs > con.rhs) return false;
        break;
      case Relation::Eq:
        if (lhs != con.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < con.rhs) return false;
        break;
    }
  }
  return true;
}

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Feasible:
      return "feasible";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

// Dense two-phase simplex tableau. Free variables are split x = u - w;
// columns are laid out [splits | slacks/surpluses | artificials] so the
// artificial block can be truncated after phase 1.
class Tableau {
 public:
  Tableau(const LinearSystem& sys) : nvars_(sys.num_vars) {
    const int m = int(sys.constraints.size());
    nsplit_ = 2 * nvars_;
    int nslack = 0;
    for (const auto& con : sys.constraints)
      if (con.rel != Relation::Eq) ++nslack;
    slack_begin_ = nsplit_;
    art_begin_ = nsplit_ + nslack;

    rows_.reserve(m);
    basis_.reserve(m);
    int next_slack = slack_begin_;
    std::vector<std::pair<int, bool>> needs_artificial;  // row, surplus sign
    for (const auto& con : sys.constraints) {
      RatVector row(art_begin_ + 1);
      const bool flip = con.rhs < 0;
      const Rat sign = flip ? -1 : 1;
      for (int j = 0; j < nvars_; ++j) {
        row[2 * j] = sign * con.coeffs[j];
        row[2 * j + 1] = -sign * con.coeffs[j];
      }
      row[art_begin_] = sign * con.rhs;  // rhs kept in the last slot for now
      Relation rel = con.rel;
      if (flip) {
        if (rel == Relation::LessEq)
          rel = Relation::GreaterEq;
        else if (rel == Relation::GreaterEq)
          rel = Relation::LessEq;
      }
      int basic = -1;
      if (rel == Relation::LessEq) {
        row[next_slack] = 1;
        basic = next_slack++;
      } else if (rel == Relation::GreaterEq) {
        row[next_slack] = -1;
        needs_artificial.emplace_back(int(rows_.size()), true);
        ++next_slack;
      } else {
        needs_artificial.emplace_back(int(rows_.size()), false);
      }
      rows_.push_back(std::move(row));
      basis_.push_back(basic);
    }
    // Widen rows with the artificial block and move rhs to the end.
    nart_ = int(needs_artificial.size());
    ncols_ = art_begin_ + nart_;
    for (auto& row : rows_) {
      Rat rhs = std::move(row[art_begin_]);
      row[art_begin_] = 0;
      row.resize(ncols_ + 1);
      row[ncols_] = std::move(rhs);
    }
    for (int a = 0; a < nart_; ++a) {
      const int r = needs_artificial[a].first;
      rows_[r][art_begin_ + a] = 1;
      basis_[r] = art_begin_ + a;
    }
  }

  // Phase 1: drive sum of artificials to zero. False means infeasible.
  bool phase1() {
    if (nart_ == 0) return true;
    RatVector cost(ncols_);
    for (int a = art_begin_; a < ncols_; ++a) cost[a] = -1;
    load_objective(cost);
    if (!run()) throw InternalError("phase-1 objective cannot be unbounded");
    if (obj_value() != 0) return false;
    purge_artificials();
    return true;
  }

  // Phase 2 for maximize(cost over split variables). True means bounded.
  bool phase2(const RatVector& split_cost) {
    RatVector cost(ncols_);
    for (int j = 0; j < nsplit_ && j < int(split_cost.size()); ++j)
      cost[j] = split_cost[j];
    load_objective(cost);
    return run();
  }

  RatVector extract_solution() const {
    RatVector x(nvars_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int b = basis_[i];
      if (b < nsplit_) {
        const int var = b / 2;
        if (b % 2 == 0)
          x[var] += rows_[i][ncols_];
        else
          x[var] -= rows_[i][ncols_];
      }
    }
    return x;
  }

 private:
  // The rhs slot of the objective row holds -z so the pivot update rule
  // applies uniformly to every column.
  Rat obj_value() const { return -obj_[ncols_]; }

  // Reduced-cost row for maximizing cost over all columns, built fresh
  // against the current basis.
  void load_objective(const RatVector& cost) {
    obj_.assign(ncols_ + 1, Rat(0));
    for (int j = 0; j < ncols_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= ncols_; ++j)
        if (rows_[i][j] != 0) obj_[j] -= cb * rows_[i][j];
    }
  }

  // Bland's rule: entering = lowest-index column with positive reduced
  // cost; leaving = min ratio, ties by lowest basic index. Returns false
  // on unboundedness.
  bool run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols_; ++j)
        if (obj_[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& a = rows_[i][enter];
        if (a <= 0) continue;
        Rat ratio = rows_[i][ncols_] / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = int(i);
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    RatVector& pr = rows_[row];
    const Rat p = pr[col];
    for (int j = 0; j <= ncols_; ++j)
      if (pr[j] != 0) pr[j] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (int(i) == row) continue;
      const Rat f = rows_[i][col];
      if (f == 0) continue;
      for (int j = 0; j <= ncols_; ++j)
        if (pr[j] != 0) rows_[i][j] -= f * pr[j];
    }
    const Rat f = obj_[col];
    if (f != 0)
      for (int j = 0; j <= ncols_; ++j)
        if (pr[j] != 0) obj_[j] -= f * pr[j];
    basis_[row] = col;
  }

  // After a zero-cost phase 1, pivot leftover artificials out of the basis
  // (their values are zero) and truncate the artificial block. Rows that
  // are zero over the real columns are redundant and dropped.
  void purge_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < art_begin_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < art_begin_; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(int(i), col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
    for (auto& row : rows_) {
      row[art_begin_] = std::move(row[ncols_]);
      row.resize(art_begin_ + 1);
    }
    ncols_ = art_begin_;
  }

  int nvars_ = 0;
  int nsplit_ = 0;
  int slack_begin_ = 0;
  int art_begin_ = 0;
  int nart_ = 0;
  int ncols_ = 0;
  std::vector<RatVector> rows_;
  std::vector<int> basis_;
  RatVector obj_;
};

LpResult solve(const RatVector* objective, const LinearSystem& sys,
               Sense sense) {
  for (const auto& con : sys.constraints)
    if (int(con.coeffs.size()) != sys.num_vars)
      throw DimensionError("constraint arity does not match num_vars");

  Tableau tab(sys);
  LpResult result;
  if (!tab.phase1()) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  if (objective) {
    RatVector split_cost(2 * sys.num_vars);
    for (int j = 0; j < sys.num_vars; ++j) {
      const Rat c = sense == Sense::Maximize ? (*objective)[j] : -(*objective)[j];
      split_cost[2 * j] = c;
      split_cost[2 * j + 1] = -c;
    }
    if (!tab.phase2(split_cost)) {
      result.status = LpStatus::Unbounded;
      return result;
    }
  }
  RatVector x = tab.extract_solution();
  if (!sys.satisfied_by(x))
    throw InternalError("simplex witness violates a constraint");
  result.status = LpStatus::Feasible;
  if (objective) {
    Rat value = 0;
    for (int j = 0; j < sys.num_vars; ++j)
      if ((*objective)[j] != 0) value += (*objective)[j] * x[j];
    result.optimum = std::move(value);
  }
  result.witness = std::move(x);
  return result;
}

}  // namespace

LpResult lp_feasible(const LinearSystem& sys) {
  return solve(nullptr, sys, Sense::Maximize);
}

LpResult lp_optimize(const RatVector& objective, const LinearSystem& sys,
                     Sense sense) {
  if (int(objective.size()) != sys.num_vars)
    throw DimensionError("objective arity does not match num_vars");
  return solve(&objective, sys, sense);
}

}  // namespace xclab
