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

#include "xclab/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace xclab {

namespace {

long long to_ll(const Int& x) {
  if (x > Int(std::numeric_limits<long long>::max()) ||
      x < Int(std::numeric_limits<long long>::min()))
    throw DomainError("integer too large for a JSON number field");
  return x.convert_to<long long>();
}

Json int_matrix_json(const std::vector<IntVector>& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Int& x : row) r.push_back(to_ll(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<IntVector> int_matrix_from(const Json& j) {
  std::vector<IntVector> out;
  for (const auto& row : j) {
    IntVector r;
    for (const auto& x : row) r.push_back(Int(x.get<long long>()));
    out.push_back(std::move(r));
  }
  return out;
}

Json rat_matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

RatMatrix rat_matrix_from(const Json& j) {
  std::vector<RatVector> rows;
  for (const auto& row : j) {
    RatVector r;
    for (const auto& x : row) r.push_back(rat_from_string(x.get<std::string>()));
    rows.push_back(std::move(r));
  }
  return RatMatrix::from_rows(rows);
}

}  // namespace

Json to_json(const VertexSet& X) {
  Json j;
  j["n"] = X.n;
  j["vertices"] = X.vertices;
  return j;
}

VertexSet vertex_set_from_json(const Json& j) {
  return make_vertex_set(j.at("n").get<int>(),
                         j.at("vertices").get<std::vector<std::vector<int>>>());
}

Json to_json(const HPolytope& P) {
  Json j;
  j["n"] = P.n;
  j["A"] = int_matrix_json(P.A);
  Json b = Json::array();
  for (const Int& x : P.b) b.push_back(to_ll(x));
  j["b"] = std::move(b);
  j["delta"] = to_ll(P.delta);
  return j;
}

HPolytope polytope_from_json(const Json& j) {
  HPolytope P;
  P.n = j.at("n").get<int>();
  P.A = int_matrix_from(j.at("A"));
  for (const auto& x : j.at("b")) P.b.push_back(Int(x.get<long long>()));
  P.delta = Int(j.at("delta").get<long long>());
  if (P.A.size() != P.b.size())
    throw DomainError("polytope file: A and b of different lengths");
  for (const auto& row : P.A)
    if (int(row.size()) != P.n) throw DomainError("polytope file: ragged A");
  return P;
}

Json to_json(const SlackMatrix& S) {
  Json j;
  j["f"] = S.f;
  j["v"] = S.v;
  Json rows = Json::array();
  for (int i = 0; i < S.f; ++i) {
    Json r = Json::array();
    for (int col = 0; col < S.v; ++col) {
      const Rat& x = S.S.at(i, col);
      if (!is_integer(x))
        throw InternalError("slack matrix entries must be integral");
      r.push_back(to_ll(Int(numerator(x))));
    }
    rows.push_back(std::move(r));
  }
  j["S"] = std::move(rows);
  return j;
}

SlackMatrix slack_from_json(const Json& j) {
  SlackMatrix S;
  S.f = j.at("f").get<int>();
  S.v = j.at("v").get<int>();
  S.S = RatMatrix(S.f, S.v);
  const auto& rows = j.at("S");
  for (int i = 0; i < S.f; ++i)
    for (int col = 0; col < S.v; ++col)
      S.S.at(i, col) = Rat(rows.at(i).at(col).get<long long>());
  return S;
}

Json to_json(const Factorization& F) {
  Json j;
  j["U"] = rat_matrix_json(F.U);
  j["V"] = rat_matrix_json(F.V);
  j["r"] = F.r;
  return j;
}

Factorization factorization_from_json(const Json& j) {
  Factorization F;
  F.U = rat_matrix_from(j.at("U"));
  F.V = rat_matrix_from(j.at("V"));
  F.r = j.at("r").get<int>();
  if (F.U.cols != F.r || F.V.rows != F.r)
    throw DomainError("factorization file: width r does not match U/V shapes");
  return F;
}

Json to_json(const DiscretizedSystem& D) {
  Json j;
  j["n"] = D.n;
  j["r"] = D.r;
  j["delta"] = to_ll(D.delta);
  j["q"] = rat_to_string(D.q);
  j["tol"] = rat_to_string(D.tol);
  j["Abar"] = int_matrix_json(D.Abar);
  j["Ubar"] = rat_matrix_json(D.Ubar);
  Json b = Json::array();
  for (const Int& x : D.bbar) b.push_back(to_ll(x));
  j["bbar"] = std::move(b);
  return j;
}

DiscretizedSystem discretized_from_json(const Json& j) {
  DiscretizedSystem D;
  D.n = j.at("n").get<int>();
  D.r = j.at("r").get<int>();
  D.delta = Int(j.at("delta").get<long long>());
  D.q = rat_from_string(j.at("q").get<std::string>());
  D.tol = rat_from_string(j.at("tol").get<std::string>());
  D.Abar = int_matrix_from(j.at("Abar"));
  D.Ubar = rat_matrix_from(j.at("Ubar"));
  for (const auto& x : j.at("bbar")) D.bbar.push_back(Int(x.get<long long>()));
  const int m = D.n + D.r;
  if (int(D.Abar.size()) != m || int(D.bbar.size()) != m || D.Ubar.rows != m)
    throw DomainError("discretized system file: expected n+r rows");
  return D;
}

Json to_json(const ApproxExtension& Q) {
  Json j;
  j["n"] = Q.n;
  j["r"] = Q.r;
  j["epsilon"] = rat_to_string(Q.epsilon);
  j["delta_small"] = rat_to_string(Q.delta_small);
  j["grid"] = rat_to_string(Q.grid);
  j["tol"] = rat_to_string(Q.tol);
  j["B"] = rat_matrix_json(Q.B);
  j["C"] = rat_matrix_json(Q.C);
  Json d = Json::array();
  for (const Rat& x : Q.d) d.push_back(rat_to_string(x));
  j["d"] = std::move(d);
  return j;
}

Json to_json(const CountReport& report) {
  Json j;
  j["n"] = report.n;
  j["matroid"] = report.matroid;
  j["target_log2"] = report.target.str();
  j["R_star"] = report.r_star.str();
  if (report.bound_below) j["bound_below"] = report.bound_below->str();
  j["bound_at"] = report.bound_at.str();
  j["saturated"] = report.saturated;
  j["ratio_to_reference"] = lower_bound_ratio(report);
  j["transcript"] = report.transcript;
  return j;
}

Json to_json(const Matroid& M) {
  Json j;
  j["n"] = M.n;
  Json fam = Json::array();
  for (std::uint32_t I : M.independent) {
    Json members = Json::array();
    for (int i = 0; i < M.n; ++i)
      if (I & (1u << i)) members.push_back(i + 1);
    fam.push_back(std::move(members));
  }
  j["independent"] = std::move(fam);
  return j;
}

Matroid matroid_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::uint32_t> family;
  for (const auto& members : j.at("independent")) {
    std::uint32_t mask = 0;
    for (const auto& e : members) {
      const int el = e.get<int>();
      if (el < 1 || el > n) throw DomainError("matroid file: element out of range");
      mask |= 1u << (el - 1);
    }
    family.push_back(mask);
  }
  return validate_matroid(n, std::move(family));
}

Json to_json(const CertificateReport& report) {
  Json items = Json::array();
  for (const auto& c : report.items) {
    Json j;
    j["name"] = c.name;
    j["ok"] = c.ok;
    if (!c.detail.empty()) j["detail"] = c.detail;
    items.push_back(std::move(j));
  }
  Json out;
  out["all_ok"] = report.all_ok();
  out["checks"] = std::move(items);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

std::string canonical_key(const DiscretizedSystem& D) {
  std::ostringstream os;
  os << D.n << "|" << D.r << ";A:";
  for (const auto& row : D.Abar) {
    for (const Int& x : row) os << x << ",";
    os << ";";
  }
  os << "U:";
  for (int i = 0; i < D.Ubar.rows; ++i) {
    for (int j = 0; j < D.Ubar.cols; ++j) os << rat_to_string(D.Ubar.at(i, j)) << ",";
    os << ";";
  }
  os << "b:";
  for (const Int& x : D.bbar) os << x << ",";
  return os.str();
}

}  // namespace xclab
