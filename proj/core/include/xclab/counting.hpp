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

#ifndef XCLAB_COUNTING_HPP_
#define XCLAB_COUNTING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "xclab/rational.hpp"

namespace xclab {

/// Exact binomial coefficient.
Int binomial(int n, int k);

/// (n+R+1)(n+R) * ceil(log2(16 delta^5)): an integer upper bound on the
/// log2 count of distinct rounded systems with width parameter R. All
/// arithmetic on big integers; ceilings only weaken the derived lower
/// bound, never the certificate. Throws DomainError for R < 1.
Int systems_log2_upper(int n, const Int& R);

// Result of the pigeonhole binary search, with the bracketing
// inequalities stored so the certificate can be re-checked.
struct CountReport {
  int n = 0;
  bool matroid = false;
  Int target;                     // log2 of the set count being beaten
  Int r_star;                     // least R whose system count reaches it
  std::optional<Int> bound_below; // systems_log2_upper(n, r_star - 1)
  Int bound_at;                   // systems_log2_upper(n, r_star)
  bool saturated = false;         // search capped at R = 2^n
  std::vector<std::string> transcript;

  /// Re-evaluates both stored inequalities.
  bool bracket_holds() const;
};

/// Certified lower bound on the worst-case extension complexity over all
/// nonempty X in {0,1}^n: the least R with systems_log2_upper(n, R) >=
/// 2^n, found by integer binary search capped at R = 2^n.
CountReport certified_xc_lower_bound(int n);

/// binom(n, floor(n/2)) / (2n), the exact log2 lower bound on the number
/// of matroids on n elements.
Rat matroid_count_log2_lower(int n);

/// Same search against floor(matroid_count_log2_lower(n)).
CountReport certified_matroid_xc_lower_bound(int n);

/// Informational only: r_star over 2^(n/2)/sqrt(n log2(2n)).
double lower_bound_ratio(const CountReport& report);

}  // namespace xclab

#endif  // XCLAB_COUNTING_HPP_
