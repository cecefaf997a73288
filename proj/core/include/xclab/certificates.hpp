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

#ifndef XCLAB_CERTIFICATES_HPP_
#define XCLAB_CERTIFICATES_HPP_

#include <string>
#include <vector>

namespace xclab {

struct Certificate {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Outcome of a batch of exact checks; failed items name the offending
// row, vertex, or objective.
struct CertificateReport {
  std::vector<Certificate> items;

  void add(std::string name, bool ok, std::string detail = std::string()) {
    items.push_back({std::move(name), ok, std::move(detail)});
  }

  bool all_ok() const {
    for (const auto& c : items)
      if (!c.ok) return false;
    return true;
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : items)
      if (!c.ok) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
    return out;
  }
};

}  // namespace xclab

#endif  // XCLAB_CERTIFICATES_HPP_
