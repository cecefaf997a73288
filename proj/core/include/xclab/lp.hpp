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

#ifndef XCLAB_LP_HPP_
#define XCLAB_LP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "xclab/rational.hpp"

namespace xclab {

enum class Relation { LessEq, Eq, GreaterEq };

struct LinearConstraint {
  RatVector coeffs;
  Relation rel = Relation::LessEq;
  Rat rhs;
};

// A system of linear inequalities and equations over free variables.
// Nonnegativity and box bounds enter as ordinary constraints.
struct LinearSystem {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;

  explicit LinearSystem(int vars = 0) : num_vars(vars) {}

  void add(RatVector coeffs, Relation rel, Rat rhs);

  /// Single-variable convenience: coeff * x_j rel rhs.
  void add_bound(int var, const Rat& coeff, Relation rel, const Rat& rhs);

  bool satisfied_by(const RatVector& point) const;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<RatVector> witness;  // satisfies every constraint exactly
  std::optional<Rat> optimum;        // objective . witness, exactly

  bool feasible() const { return status == LpStatus::Feasible; }
};

enum class Sense { Maximize, Minimize };

/// Exact feasibility test. Infeasibility is a status, never an exception.
LpResult lp_feasible(const LinearSystem& sys);

/// Exact optimization: two-phase simplex with Bland's anti-cycling rule
/// over rationals. Deterministic: identical input yields identical witness.
LpResult lp_optimize(const RatVector& objective, const LinearSystem& sys,
                     Sense sense);

std::string to_string(LpStatus s);

}  // namespace xclab

#endif  // XCLAB_LP_HPP_
