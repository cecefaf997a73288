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

#ifndef XCLAB_FACTORIZATION_HPP_
#define XCLAB_FACTORIZATION_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "xclab/certificates.hpp"
#include "xclab/lp.hpp"
#include "xclab/matrix.hpp"
#include "xclab/polytope.hpp"

namespace xclab {

// Nonnegative factorization S = UV of width r: U is f x r, V is r x v.
struct Factorization {
  RatMatrix U;
  RatMatrix V;
  int r = 0;
};

enum class Side { Left, Right };

/// side = Left gives (U, V) = (S, I_v) with r = v; Right gives (I_f, S)
/// with r = f. Always valid for nonnegative S.
Factorization trivial_factorization(const SlackMatrix& S, Side side);

struct ValidationResult {
  bool ok = true;
  std::string detail;
};

/// Confirms U >= 0, V >= 0 and UV = S exactly; reports the first
/// violating entry otherwise. Throws DimensionError on shape mismatch.
ValidationResult validate_factorization(const SlackMatrix& S,
                                        const Factorization& F);

/// Column/row rescaling to infinity-norm at most delta on both factors,
/// leaving the product UV untouched. A zero column of U zeroes the
/// matching row of V (and symmetrically). Columns already within bounds
/// are left alone. Throws PreconditionError if some column has
/// |U^l| * |V_l| > delta^2, which cannot happen for factorizations of
/// slack matrices with entries <= (n+1) delta <= delta^2.
Factorization normalize(const Factorization& F, const Int& delta);

// Q = {(x,y) : Ax + Uy = b, y >= 0} with the coordinate projection onto
// the first n variables. Its size is r, the number of inequality rows.
struct ExtendedFormulation {
  HPolytope P;
  Factorization F;

  int size() const { return F.r; }

  /// Variables (x_1..x_n, y_1..y_r): the equations plus y >= 0.
  LinearSystem to_system() const;
};

/// Throws PreconditionError unless F validates against slack_matrix(P, X).
ExtendedFormulation build_extension(const HPolytope& P, const VertexSet& X,
                                    const Factorization& F);

/// Certifies the extension: (a) for every vertex x_j the witness y = V^j
/// satisfies Ax_j + Uy = b exactly and y >= 0; (b) for every facet row l,
/// max A_l x over Q equals b_l by exact LP, so proj_x(Q) stays inside the
/// polytope and every row is tight.
CertificateReport verify_extension(const ExtendedFormulation& EF,
                                   const VertexSet& X);

/// Best-effort search for a width-r factorization: float multiplicative
/// updates, entries of one factor snapped to small denominators, the other
/// factor recovered column-by-column with exact LP feasibility, result
/// re-validated exactly. Deterministic given the seed. Absence is a
/// result, not an error; a returned factorization always validates.
std::optional<Factorization> nmf_heuristic(const SlackMatrix& S, int r,
                                           std::uint64_t seed, int iterations);

}  // namespace xclab

#endif  // XCLAB_FACTORIZATION_HPP_
