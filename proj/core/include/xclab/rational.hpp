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

#ifndef XCLAB_RATIONAL_HPP_
#define XCLAB_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace xclab {

// Exact arbitrary-precision scalars. GMP keeps rationals in canonical form
// (positive denominator, gcd-reduced) after every operation, so equality
// and hashing on values are exact.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what)
      : std::invalid_argument("dimension error: " + what) {}
};

class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what)
      : std::invalid_argument("domain error: " + what) {}
};

class SpanError : public std::invalid_argument {
 public:
  explicit SpanError(const std::string& what)
      : std::invalid_argument("span error: " + what) {}
};

class RankError : public std::invalid_argument {
 public:
  explicit RankError(const std::string& what)
      : std::invalid_argument("rank error: " + what) {}
};

class ConsistencyError : public std::invalid_argument {
 public:
  explicit ConsistencyError(const std::string& what)
      : std::invalid_argument("consistency error: " + what) {}
};

class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument("precondition violation: " + what) {}
};

// Breach of an internal invariant that valid inputs can never trigger.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what)
      : std::logic_error("internal invariant breach: " + what) {}
};

/// Serializes as "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& x);

/// Parses "p/q" or "p". Throws DomainError on malformed input or q <= 0.
Rat rat_from_string(const std::string& s);

/// Largest integer <= x.
Int rat_floor(const Rat& x);

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

/// max_i |v_i| over a rational vector; 0 for the empty vector.
Rat linf_norm(const RatVector& v);

/// Number of bits in |x| (bit length of the magnitude); 0 for x = 0.
std::size_t bit_length(const Int& x);

/// Smallest integer k with 2^k >= m, for m >= 1. Computed from bit
/// lengths, no floating point. Throws DomainError for m < 1.
Int ceil_log2(const Int& m);

/// Smallest integer s with s^2 >= m, for m >= 0.
Int ceil_sqrt(const Int& m);

}  // namespace xclab

#endif  // XCLAB_RATIONAL_HPP_
