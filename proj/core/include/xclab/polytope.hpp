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

#ifndef XCLAB_POLYTOPE_HPP_
#define XCLAB_POLYTOPE_HPP_

#include <cstdint>
#include <vector>

#include "xclab/matrix.hpp"
#include "xclab/rational.hpp"

namespace xclab {

// Nonempty X subset of {0,1}^n. Vertices are kept in canonical order:
// ascending by sum_i x_i 2^i (coordinate 1 is the lowest bit), the order
// under which the fixture slack matrices come out as identities.
struct VertexSet {
  int n = 0;
  std::vector<std::vector<int>> vertices;

  int size() const { return int(vertices.size()); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Canonicalizes and validates: nonempty, all coordinates 0/1, no
/// duplicates. Throws DomainError on violations.
VertexSet make_vertex_set(int n, std::vector<std::vector<int>> points);

/// Point index in the canonical enumeration of {0,1}^n.
std::uint64_t vertex_index(const std::vector<int>& x);
std::vector<int> vertex_from_index(int n, std::uint64_t idx);

/// The X encoded by a nonzero bitmask over point indices 0..2^n-1.
VertexSet vertex_set_from_mask(int n, std::uint64_t mask);

/// Smallest integer >= (n+1)^((n+1)/2), the facet-coefficient bound used
/// everywhere a Delta appears; integral so every derived grid and box stays
/// rational. Throws DomainError for n < 1.
Int delta_int(int n);

// Non-redundant integer system Ax <= b with conv(X) = {x : Ax <= b}.
// Affine-hull equations appear as opposite inequality pairs. Rows are
// gcd-reduced and canonically ordered: descending rhs, then lexicographic
// ascending coefficients.
struct HPolytope {
  int n = 0;
  std::vector<IntVector> A;
  IntVector b;
  Int delta;

  int num_rows() const { return int(A.size()); }

  /// b_i - A_i x, exactly.
  Rat slack(int row, const RatVector& x) const;
  RatVector row_rat(int i) const;

  friend bool operator==(const HPolytope&, const HPolytope&) = default;
};

/// Exact facet description of conv(X): candidate hyperplanes through
/// affinely independent vertex subsets, integer normals from exact
/// nullspaces, kept when valid for all of X and tight on a facet. The
/// affine hull is computed first by exact rank; a single point yields the
/// 2n box-equality pairs.
HPolytope hull(const VertexSet& X);

// Integer slack matrix S with S_ij = b_i - A_i x_j.
struct SlackMatrix {
  RatMatrix S;
  int f = 0;
  int v = 0;
};

/// Throws ConsistencyError if some vertex violates the system.
SlackMatrix slack_matrix(const HPolytope& P, const VertexSet& X);

}  // namespace xclab

#endif  // XCLAB_POLYTOPE_HPP_
