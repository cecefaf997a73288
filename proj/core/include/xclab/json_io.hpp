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

#ifndef XCLAB_JSON_IO_HPP_
#define XCLAB_JSON_IO_HPP_

#include "json.hpp"

#include <string>

#include "xclab/approximator.hpp"
#include "xclab/certificates.hpp"
#include "xclab/counting.hpp"
#include "xclab/discretizer.hpp"
#include "xclab/factorization.hpp"
#include "xclab/matroid.hpp"
#include "xclab/polytope.hpp"

namespace xclab {

// All file artifacts are JSON; rationals travel as "p/q" strings ("p"
// when the denominator is 1) so serialization loses nothing.
using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& X);
VertexSet vertex_set_from_json(const Json& j);

Json to_json(const HPolytope& P);
HPolytope polytope_from_json(const Json& j);

Json to_json(const SlackMatrix& S);
SlackMatrix slack_from_json(const Json& j);

Json to_json(const Factorization& F);
Factorization factorization_from_json(const Json& j);

Json to_json(const DiscretizedSystem& D);
DiscretizedSystem discretized_from_json(const Json& j);

/// The public face of Q: shapes, tolerances and (B, C, d) only.
Json to_json(const ApproxExtension& Q);

Json to_json(const CountReport& report);

Json to_json(const Matroid& M);
Matroid matroid_from_json(const Json& j);

Json to_json(const CertificateReport& report);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Canonical single-line serialization of the (Abar, Ubar, bbar) triple,
/// shapes included; distinct systems get distinct strings.
std::string canonical_key(const DiscretizedSystem& D);

}  // namespace xclab

#endif  // XCLAB_JSON_IO_HPP_
