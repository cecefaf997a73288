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

#include "xclab/counting.hpp"

#include <cmath>
#include <sstream>

#include "xclab/polytope.hpp"

namespace xclab {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: the partial product is always divisible
  }
  return out;
}

Int systems_log2_upper(int n, const Int& R) {
  if (R < 1) throw DomainError("systems_log2_upper requires R >= 1");
  if (n < 1) throw DomainError("systems_log2_upper requires n >= 1");
  const Int delta = delta_int(n);
  const Int per_entry = ceil_log2(16 * pow(delta, 5));
  return (Int(n) + R + 1) * (Int(n) + R) * per_entry;
}

bool CountReport::bracket_holds() const {
  if (saturated) return false;  // capped search certifies nothing
  if (bound_at < target) return false;
  if (bound_below && *bound_below >= target) return false;
  if (bound_at != systems_log2_upper(n, r_star)) return false;
  if (bound_below && *bound_below != systems_log2_upper(n, r_star - 1))
    return false;
  return true;
}

namespace {

CountReport search(int n, const Int& target, bool matroid) {
  CountReport report;
  report.n = n;
  report.matroid = matroid;
  report.target = target;

  const Int cap = pow(Int(2), unsigned(n));
  std::ostringstream head;
  head << "per-entry domain bound: ceil(log2(16 Delta^5)) = "
       << ceil_log2(16 * pow(delta_int(n), 5)) << " with Delta = " << delta_int(n);
  report.transcript.push_back(head.str());
  report.transcript.push_back(
      "log2(#systems at width R) <= (n+R+1)(n+R) * per-entry bound");

  if (systems_log2_upper(n, cap) < target) {
    report.saturated = true;
    report.r_star = cap;
    report.bound_at = systems_log2_upper(n, cap);
    report.transcript.push_back(
        "search saturated at the R <= 2^n guard; no certified bracket");
    return report;
  }

  Int lo = 1, hi = cap;  // invariant: bound(hi) >= target
  while (lo < hi) {
    const Int mid = lo + (hi - lo) / 2;
    if (systems_log2_upper(n, mid) >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  report.r_star = lo;
  report.bound_at = systems_log2_upper(n, lo);
  if (lo > 1) report.bound_below = systems_log2_upper(n, lo - 1);

  std::ostringstream line;
  line << "R* = " << report.r_star << ": ";
  if (report.bound_below) line << *report.bound_below << " < ";
  line << target << " <= " << report.bound_at;
  report.transcript.push_back(line.str());
  return report;
}

}  // namespace

CountReport certified_xc_lower_bound(int n) {
  if (n < 1) throw DomainError("certified_xc_lower_bound requires n >= 1");
  return search(n, pow(Int(2), unsigned(n)), /*matroid=*/false);
}

Rat matroid_count_log2_lower(int n) {
  if (n < 1) throw DomainError("matroid_count_log2_lower requires n >= 1");
  return Rat(binomial(n, n / 2), Int(2) * n);
}

CountReport certified_matroid_xc_lower_bound(int n) {
  if (n < 1)
    throw DomainError("certified_matroid_xc_lower_bound requires n >= 1");
  Int target = rat_floor(matroid_count_log2_lower(n));
  CountReport report = search(n, target, /*matroid=*/true);
  if (target < 1)
    report.transcript.push_back(
        "target floor is below 1; the R* = 1 bound is trivial at this n");
  return report;
}

double lower_bound_ratio(const CountReport& report) {
  const double n = double(report.n);
  const double reference = std::exp2(n / 2) / std::sqrt(n * std::log2(2 * n));
  return double(report.r_star) / reference;
}

}  // namespace xclab
