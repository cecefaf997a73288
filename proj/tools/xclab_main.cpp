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

// Command-line front end: hull -> slack -> factorize -> extend /
// discretize / approx -> verify / bound, with JSON artifacts between the
// stages. Exit codes: 0 ok, 1 usage or parse error, 2 certificate
// failure, 3 internal invariant breach.

#include "CLI11.hpp"

#include <atomic>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "xclab/json_io.hpp"

namespace {

using namespace xclab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertificate = 2;
constexpr int kExitInternal = 3;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out_path, j);
}

VertexSet load_vertices(const std::string& path) {
  return vertex_set_from_json(read_json_file(path));
}

std::optional<Factorization> load_factorization(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return factorization_from_json(read_json_file(path));
}

int report_certificates(const CertificateReport& report,
                        const std::string& out_path) {
  emit(to_json(report), out_path);
  if (report.all_ok()) return kExitOk;
  for (const std::string& f : report.failures())
    std::cerr << "FAILED " << f << "\n";
  return kExitCertificate;
}

struct RoundtripSummary {
  std::uint64_t total = 0;
  std::uint64_t reconstructed = 0;
  std::uint64_t distinct_keys = 0;
  std::vector<std::uint64_t> failed_masks;
};

RoundtripSummary roundtrip_sweep(int n, int jobs) {
  const std::uint64_t num_sets = (std::uint64_t(1) << (std::uint64_t(1) << n)) - 1;
  std::vector<std::string> keys(num_sets);
  std::vector<char> ok(num_sets, 0);
  std::atomic<std::uint64_t> next{1};

  auto worker = [&]() {
    for (;;) {
      const std::uint64_t mask = next.fetch_add(1);
      if (mask > num_sets) return;
      const VertexSet X = vertex_set_from_mask(n, mask);
      const DiscretizedSystem D = discretize(X);
      ok[mask - 1] = reconstruct(D) == X ? 1 : 0;
      keys[mask - 1] = canonical_key(D);
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::max(1, jobs);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  RoundtripSummary s;
  s.total = num_sets;
  std::set<std::string> distinct;
  for (std::uint64_t m = 1; m <= num_sets; ++m) {
    if (ok[m - 1])
      ++s.reconstructed;
    else
      s.failed_masks.push_back(m);
    distinct.insert(keys[m - 1]);
  }
  s.distinct_keys = distinct.size();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic laboratory for extension complexity of 0/1 polytopes"};
  app.require_subcommand(1);

  std::string in_path, out_path, factorization_path, objectives_path;
  std::string side = "left", family = "uniform", edges_arg, file_arg;
  std::string eps_arg, tol_arg;
  int n = 0, k = 0, nodes = 0, r_width = 0, iterations = 400, random_objectives = 4;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool matroid_flag = false, verify_flag = false;
  std::string vertices_out, polytope_out;

  auto* hull_cmd = app.add_subcommand("hull", "facet description of conv(X)");
  hull_cmd->add_option("input", in_path, "vertex-set JSON")->required();
  hull_cmd->add_option("--out", out_path, "output path");

  auto* slack_cmd = app.add_subcommand("slack", "slack matrix of hull(X)");
  slack_cmd->add_option("input", in_path, "vertex-set JSON")->required();
  slack_cmd->add_option("--out", out_path, "output path");

  auto* fact_cmd = app.add_subcommand("factorize", "factor the slack matrix");
  fact_cmd->add_option("input", in_path, "vertex-set JSON")->required();
  fact_cmd->add_option("--side", side, "left|right trivial factorization");
  fact_cmd->add_option("--r", r_width, "width for the heuristic search");
  fact_cmd->add_option("--seed", seed, "heuristic seed");
  fact_cmd->add_option("--iterations", iterations, "heuristic iterations");
  fact_cmd->add_option("--out", out_path, "output path");

  auto* extend_cmd = app.add_subcommand("extend", "build the lifted system");
  extend_cmd->add_option("input", in_path, "vertex-set JSON")->required();
  extend_cmd->add_option("--factorization", factorization_path, "factorization JSON");
  extend_cmd->add_option("--out", out_path, "output path");

  auto* verify_cmd =
      app.add_subcommand("verify-extension", "certify the lifted system");
  verify_cmd->add_option("input", in_path, "vertex-set JSON")->required();
  verify_cmd->add_option("--factorization", factorization_path, "factorization JSON");
  verify_cmd->add_option("--out", out_path, "output path");

  auto* disc_cmd = app.add_subcommand("discretize", "rounded subsystem of X");
  disc_cmd->add_option("input", in_path, "vertex-set JSON")->required();
  disc_cmd->add_option("--factorization", factorization_path, "factorization JSON");
  disc_cmd->add_option("--tol", tol_arg, "membership tolerance override, p/q");
  disc_cmd->add_option("--out", out_path, "output path");

  auto* rec_cmd = app.add_subcommand("reconstruct", "invert a rounded system");
  rec_cmd->add_option("input", in_path, "discretized-system JSON")->required();
  rec_cmd->add_option("--out", out_path, "output path");

  auto* round_cmd =
      app.add_subcommand("roundtrip", "exhaustive discretize/reconstruct sweep");
  round_cmd->add_option("--n", n, "dimension")->required();
  round_cmd->add_option("--jobs", jobs, "worker count");

  auto* approx_cmd = app.add_subcommand("approx", "compact approximate extension");
  approx_cmd->add_option("input", in_path, "vertex-set JSON")->required();
  approx_cmd->add_option("--eps", eps_arg, "epsilon, p/q")->required();
  approx_cmd->add_option("--factorization", factorization_path, "factorization JSON");
  approx_cmd->add_option("--objectives", objectives_path,
                         "JSON array of extra objectives");
  approx_cmd->add_option("--seed", seed, "seed for the random objectives");
  approx_cmd->add_option("--random-objectives", random_objectives,
                         "number of random objectives");
  approx_cmd->add_option("--out", out_path, "output path");

  auto* bound_cmd = app.add_subcommand("bound", "certified counting lower bound");
  bound_cmd->add_option("--n", n, "dimension / ground-set size")->required();
  bound_cmd->add_flag("--matroid", matroid_flag, "matroid-count variant");
  bound_cmd->add_option("--out", out_path, "output path");

  auto* matroid_cmd = app.add_subcommand("matroid", "construct and export matroids");
  matroid_cmd->add_option("--family", family, "uniform|graphic|file");
  matroid_cmd->add_option("--n", n, "ground-set size (uniform)");
  matroid_cmd->add_option("--k", k, "rank cap (uniform)");
  matroid_cmd->add_option("--nodes", nodes, "node count (graphic)");
  matroid_cmd->add_option("--edges", edges_arg, "edge list a-b,c-d (graphic)");
  matroid_cmd->add_option("--file", file_arg, "matroid JSON (family=file)");
  matroid_cmd->add_flag("--verify", verify_flag,
                        "cross-check rank description against the hull");
  matroid_cmd->add_option("--out", out_path, "matroid JSON output");
  matroid_cmd->add_option("--vertices-out", vertices_out,
                          "characteristic-vector set output");
  matroid_cmd->add_option("--polytope-out", polytope_out,
                          "rank-description polytope output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*hull_cmd) {
      emit(to_json(hull(load_vertices(in_path))), out_path);
    } else if (*slack_cmd) {
      const VertexSet X = load_vertices(in_path);
      emit(to_json(slack_matrix(hull(X), X)), out_path);
    } else if (*fact_cmd) {
      const VertexSet X = load_vertices(in_path);
      const SlackMatrix S = slack_matrix(hull(X), X);
      if (fact_cmd->count("--r") > 0) {
        const auto F = nmf_heuristic(S, r_width, seed, iterations);
        if (!F) {
          std::cerr << "no width-" << r_width << " factorization found\n";
          return kExitCertificate;
        }
        emit(to_json(*F), out_path);
      } else if (side == "left" || side == "right") {
        emit(to_json(trivial_factorization(
                 S, side == "left" ? Side::Left : Side::Right)),
             out_path);
      } else {
        std::cerr << "--side must be left or right\n";
        return kExitUsage;
      }
    } else if (*extend_cmd) {
      const VertexSet X = load_vertices(in_path);
      const HPolytope P = hull(X);
      const Factorization F = load_factorization(factorization_path)
                                  .value_or(trivial_factorization(
                                      slack_matrix(P, X), Side::Left));
      const ExtendedFormulation EF = build_extension(P, X, F);
      Json j;
      j["polytope"] = to_json(EF.P);
      j["factorization"] = to_json(EF.F);
      j["size"] = EF.size();
      emit(j, out_path);
    } else if (*verify_cmd) {
      const VertexSet X = load_vertices(in_path);
      const HPolytope P = hull(X);
      const Factorization F = load_factorization(factorization_path)
                                  .value_or(trivial_factorization(
                                      slack_matrix(P, X), Side::Left));
      return report_certificates(verify_extension(build_extension(P, X, F), X),
                                 out_path);
    } else if (*disc_cmd) {
      const VertexSet X = load_vertices(in_path);
      std::optional<Rat> tol;
      if (!tol_arg.empty()) tol = rat_from_string(tol_arg);
      emit(to_json(discretize(X, load_factorization(factorization_path), tol)),
           out_path);
    } else if (*rec_cmd) {
      const DiscretizedSystem D = discretized_from_json(read_json_file(in_path));
      emit(to_json(reconstruct(D)), out_path);
    } else if (*round_cmd) {
      if (n < 1 || n > 4) {
        std::cerr << "roundtrip sweep supports --n between 1 and 4\n";
        return kExitUsage;
      }
      const RoundtripSummary s = roundtrip_sweep(n, jobs);
      std::cout << s.reconstructed << "/" << s.total << " reconstructed, "
                << s.distinct_keys << "/" << s.total << " distinct systems\n";
      if (s.reconstructed != s.total || s.distinct_keys != s.total) {
        for (std::uint64_t m : s.failed_masks)
          std::cerr << "reconstruction failed for mask " << m << "\n";
        return kExitCertificate;
      }
    } else if (*approx_cmd) {
      const VertexSet X = load_vertices(in_path);
      const Rat eps = rat_from_string(eps_arg);
      const ApproxExtension Q =
          build_approx(X, load_factorization(factorization_path), eps);
      std::vector<RatVector> objectives =
          objective_battery(Q.P, seed, random_objectives);
      if (!objectives_path.empty()) {
        for (const auto& row : read_json_file(objectives_path)) {
          RatVector c;
          for (const auto& x : row)
            c.push_back(rat_from_string(x.get<std::string>()));
          objectives.push_back(std::move(c));
        }
      }
      const CertificateReport report = verify_sandwich(Q, X, objectives);
      Json j;
      j["Q"] = to_json(Q);
      j["certificates"] = to_json(report).at("checks");
      emit(j, out_path);
      if (!report.all_ok()) {
        for (const std::string& f : report.failures())
          std::cerr << "FAILED " << f << "\n";
        return kExitCertificate;
      }
    } else if (*bound_cmd) {
      const CountReport report = matroid_flag
                                     ? certified_matroid_xc_lower_bound(n)
                                     : certified_xc_lower_bound(n);
      emit(to_json(report), out_path);
      for (const std::string& line : report.transcript)
        std::cerr << line << "\n";
      if (!report.bracket_holds()) return kExitCertificate;
    } else if (*matroid_cmd) {
      Matroid M;
      if (family == "uniform") {
        M = uniform_matroid(n, k);
      } else if (family == "graphic") {
        std::vector<std::pair<int, int>> edges;
        std::string item;
        std::istringstream stream(edges_arg);
        while (std::getline(stream, item, ',')) {
          const auto dash = item.find('-');
          if (dash == std::string::npos)
            throw DomainError("edge must look like a-b: " + item);
          edges.emplace_back(std::stoi(item.substr(0, dash)),
                             std::stoi(item.substr(dash + 1)));
        }
        M = graphic_matroid(nodes, edges);
      } else if (family == "file") {
        M = matroid_from_json(read_json_file(file_arg));
      } else {
        std::cerr << "--family must be uniform, graphic or file\n";
        return kExitUsage;
      }
      if (!out_path.empty() || (vertices_out.empty() && polytope_out.empty()))
        emit(to_json(M), out_path);
      if (!vertices_out.empty() || !polytope_out.empty() || verify_flag) {
        const MatroidPolytope MP = matroid_polytope(M);
        if (!vertices_out.empty()) write_json_file(vertices_out, to_json(MP.vertices));
        if (!polytope_out.empty()) write_json_file(polytope_out, to_json(MP.polytope));
        if (verify_flag) {
          const CertificateReport report = verify_rank_description(MP);
          std::cout << to_json(report).dump(2) << "\n";
          if (!report.all_ok()) return kExitCertificate;
        }
      }
    }
  } catch (const InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
