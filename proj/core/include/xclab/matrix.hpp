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

#ifndef XCLAB_MATRIX_HPP_
#define XCLAB_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "xclab/rational.hpp"

namespace xclab {

// Dense row-major rational matrix. Vectors are carried as 1-column
// matrices or plain RatVector depending on context.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> entries;  // rows * cols, row-major

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c) {}

  static RatMatrix identity(int k);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  Rat& at(int i, int j) { return entries[std::size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return entries[std::size_t(i) * cols + j]; }

  RatVector row(int i) const;
  RatVector col(int j) const;
  RatMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

RatMatrix mul(const RatMatrix& a, const RatMatrix& b);

/// Matrix-vector product Mx.
RatVector mul(const RatMatrix& m, const RatVector& x);

/// Largest absolute entry; 0 for an empty matrix.
Rat linf_norm(const RatMatrix& m);

/// Exact determinant by Gaussian elimination over the rationals.
/// Throws DimensionError for non-square input.
Rat det(const RatMatrix& m);

/// Row rank by exact elimination.
int rank(const RatMatrix& m);

/// det(W^T W) where W has the given vectors as columns: the squared
/// k-dimensional volume of the parallelepiped they span. Zero iff the
/// vectors are dependent. Squaring keeps the value rational, and every
/// comparison downstream is a ratio or ordering, which squaring preserves.
/// Throws DimensionError if the vectors have mismatched lengths.
Rat gram_volume_sq(const std::vector<RatVector>& vectors);

/// Unique coefficients lambda with target = sum_i lambda_i * basis_i.
/// Throws RankError if the basis is dependent, SpanError if the target is
/// not in its span. Satisfies the volume-ratio identity
/// lambda_i^2 * vol^2(basis) = vol^2(basis with entry i replaced by target).
RatVector cramer_coefficients(const std::vector<RatVector>& basis,
                              const RatVector& target);

/// Basis of {x : Mx = 0} read off the reduced row echelon form, one vector
/// per free column in ascending column order. Deterministic.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Scales a nonzero rational vector to the integer vector with coprime
/// entries and positive first nonzero entry. Throws DomainError on zero input.
IntVector primitive_integer(const RatVector& v);

inline RatVector to_rat(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

Rat dot(const RatVector& a, const RatVector& b);

}  // namespace xclab

#endif  // XCLAB_MATRIX_HPP_
