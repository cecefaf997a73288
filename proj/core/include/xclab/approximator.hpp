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

#ifndef XCLAB_APPROXIMATOR_HPP_
#define XCLAB_APPROXIMATOR_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "xclab/certificates.hpp"
#include "xclab/discretizer.hpp"
#include "xclab/factorization.hpp"
#include "xclab/matrix.hpp"
#include "xclab/polytope.hpp"

namespace xclab {

/// min{ 1/(2 (n delta)^(2n+2)), epsilon/(n (n delta)^n) }, exactly.
/// Throws DomainError for epsilon <= 0.
Rat compute_delta(int n, const Int& delta, const Rat& epsilon);

// Compact approximate extension Q = {(x,y) : Bx + Cy <= d} with exactly
// 4r + 2n inequality rows: the tolerance band unrolled into 2(n+r) row
// pairs followed by the 2r box rows on y. Entry encoding lengths stay
// polynomial in n, r and log(1/epsilon).
struct ApproxExtension {
  int n = 0;
  int r = 0;
  Rat epsilon;
  Rat delta_small;  // the rounding budget delta of the construction
  RatMatrix B;      // (4r+2n) x n
  RatMatrix C;      // (4r+2n) x r
  RatVector d;
  Rat grid;  // delta_small / (4 r (n+r) delta)
  Rat tol;   // delta_small / (4 (n+r))

  // Construction provenance, used by the certificates.
  HPolytope P;
  RatMatrix witnesses;  // normalized V: column j certifies vertex j
  Int delta;

  int num_rows() const { return B.rows; }

  LinearSystem to_system() const;  // variables (x, y)
};

/// Same pipeline as discretize but on the delta-scaled grid.
ApproxExtension build_approx(const VertexSet& X,
                             const std::optional<Factorization>& F,
                             const Rat& epsilon);

/// Facet normals, plus/minus unit vectors, and seeded random rational
/// objectives for the gap certificate.
std::vector<RatVector> objective_battery(const HPolytope& P, std::uint64_t seed,
                                         int random_count);

/// Three certificate families, all exact:
///   (a) every vertex with its factorization witness satisfies Q;
///   (b) per original facet l, max A_l x over Q <= b_l + delta_small;
///   (c) per objective c, (max over Q) - (max over the vertex set) is <= 0
///       or its square is <= epsilon^2 |c|_2^2.
CertificateReport verify_sandwich(const ApproxExtension& Q, const VertexSet& X,
                                  const std::vector<RatVector>& objectives);

/// Largest numerator/denominator bit length over B, C, d.
std::size_t max_entry_bits(const ApproxExtension& Q);

}  // namespace xclab

#endif  // XCLAB_APPROXIMATOR_HPP_
