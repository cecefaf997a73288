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

#ifndef XCLAB_MATROID_HPP_
#define XCLAB_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xclab/certificates.hpp"
#include "xclab/polytope.hpp"
#include "xclab/rational.hpp"

namespace xclab {

// Matroid on ground set {1..n} with an explicit independence family,
// bitset-encoded (bit i-1 is element i). Families are kept sorted.
struct Matroid {
  int n = 0;
  std::vector<std::uint32_t> independent;

  bool is_independent(std::uint32_t set) const;
};

struct AxiomViolation {
  std::string axiom;  // "downward-closure" or "exchange"
  std::uint32_t set_a = 0;
  std::uint32_t set_b = 0;
  std::string detail;
};

/// Exhaustive check of both axioms plus membership of the empty set.
std::optional<AxiomViolation> check_matroid_axioms(
    int n, const std::vector<std::uint32_t>& family);

/// Checked constructor. Throws DomainError carrying the witness pair on
/// an axiom violation.
Matroid validate_matroid(int n, std::vector<std::uint32_t> family);

/// U_{k,n}: all subsets of size at most k.
Matroid uniform_matroid(int n, int k);

/// Forests of a simple graph; ground-set element i is edge i (1-based in
/// the matroid encoding). Nodes are 0-based in the edge list.
Matroid graphic_matroid(int num_nodes,
                        const std::vector<std::pair<int, int>>& edges);

/// max |I| over independent I contained in S.
int matroid_rank(const Matroid& M, std::uint32_t S);

struct GreedyResult {
  std::uint32_t set = 0;
  Rat value;
};

/// Max-weight independent set: elements by descending weight (ties to the
/// lower index), added when independence is preserved, nonpositive
/// weights skipped.
GreedyResult greedy_optimize(const Matroid& M, const RatVector& weights);

struct MatroidPolytope {
  VertexSet vertices;  // characteristic vectors of the independent sets
  HPolytope polytope;  // pruned rank inequalities plus x >= 0
};

/// Rank inequalities for every nonempty subset plus nonnegativity, pruned
/// to a non-redundant subsystem by LP. Rows come out in the canonical
/// hull order.
MatroidPolytope matroid_polytope(const Matroid& M);

/// Certifies that the pruned rank system and hull(vertices) cut out the
/// same set: every vertex satisfies both systems and each system's rows
/// are honored by LP maxima over the other. Enumerative, so meant for
/// small ground sets.
CertificateReport verify_rank_description(const MatroidPolytope& MP);

}  // namespace xclab

#endif  // XCLAB_MATROID_HPP_
