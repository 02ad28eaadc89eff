// Copyright 2026 The contig Authors
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

// Command line front end: estimate bounds, verify certificates, build
// products and subdivisions, evaluate planners, export paper-style tables.
//
// Exit codes: 0 success, 1 verification failure or uncovered query,
// 2 invalid input, 3 no cover produced within the time budget.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "contig/io.hpp"

namespace {

using namespace contig;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNoCover = 3;

std::int64_t max_facets_from_env() {
  if (const char* raw = std::getenv("CONTIG_MAX_FACETS")) {
    try {
      return std::stoll(raw);
    } catch (const std::exception&) {
      throw std::invalid_argument("CONTIG_MAX_FACETS is not an integer");
    }
  }
  return 1'000'000;
}

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
  std::vector<std::uint64_t> seeds;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    seeds.push_back(std::stoull(token));
  }
  if (seeds.empty()) {
    throw std::invalid_argument("at least one seed is required");
  }
  return seeds;
}

BarycentricPoint parse_point(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    return BarycentricPoint::at_vertex(std::stoi(spec));
  }
  BarycentricPoint point;
  std::istringstream carrier(spec.substr(0, colon));
  std::string token;
  while (std::getline(carrier, token, ',')) {
    point.carrier.push_back(std::stoi(token));
  }
  std::istringstream weights(spec.substr(colon + 1));
  while (std::getline(weights, token, ',')) {
    point.weights.push_back(rational_from_string(token));
  }
  return point;
}

struct EstimateOptions {
  std::string input;
  int max_iterations = 1000;
  double accept_probability = 0.1;
  int optimize_rounds = 500;
  int target_parts = 1;
  int depth = 0;
  std::string seeds = "1,2,3,4,5";
  std::string variant = "neighborhood";
  double time_budget_seconds = 0.0;
  int jobs = 0;
  VertexId base = 0;
  std::string out;
  std::string report_path;
};

SearchParams params_for(const EstimateOptions& options, std::uint64_t seed) {
  SearchParams params;
  params.max_iterations = options.max_iterations;
  params.accept_probability = options.accept_probability;
  params.optimize_rounds = options.optimize_rounds;
  params.target_parts = options.target_parts;
  params.variant = options.variant == "basic" ? SearchVariant::kBasic
                                              : SearchVariant::kNeighborhood;
  params.seed = seed;
  params.validate();
  return params;
}

void add_estimate_flags(CLI::App* cmd, EstimateOptions& options) {
  cmd->add_option("--M", options.max_iterations,
                  "local search iteration budget");
  cmd->add_option("--r", options.accept_probability,
                  "acceptance probability for non-improving steps");
  cmd->add_option("--N", options.optimize_rounds,
                  "covering optimization rounds");
  cmd->add_option("--t", options.target_parts,
                  "stop once the cover has at most this many parts");
  cmd->add_option("--depth", options.depth,
                  "iterated barycentric subdivisions of the domain");
  cmd->add_option("--seeds", options.seeds, "comma separated seed list");
  cmd->add_option("--variant", options.variant, "basic | neighborhood")
      ->check(CLI::IsMember({"basic", "neighborhood"}));
  cmd->add_option("--time-budget", options.time_budget_seconds,
                  "wall-clock budget in seconds for all seeds together");
  cmd->add_option("--jobs", options.jobs,
                  "parallel seed workers (default: hardware)");
  cmd->add_option("--out", options.out, "path for the best verified cover");
  cmd->add_option("--report", options.report_path,
                  "path for the run report (default <out>.report.json)");
}

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::optional<DistanceReport> report;
  bool verified = false;
  std::string error;
};

// Runs one estimation per seed on a bounded worker pool and keeps the
// smallest verified cover (ties: lowest seed).
int run_estimate(const EstimateOptions& options,
                 const std::function<DistanceReport(const SearchParams&,
                                                    const Deadline&)>& runner,
                 std::optional<std::string> psi_spec,
                 std::optional<std::string> psi_prime_spec,
                 std::optional<int> domain_codec) {
  const std::vector<std::uint64_t> seeds = parse_seeds(options.seeds);
  Deadline deadline;
  if (options.time_budget_seconds > 0.0) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(options.time_budget_seconds));
  }

  std::vector<SeedOutcome> outcomes(seeds.size());
  std::atomic<std::size_t> next{0};
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min(seeds.size(),
               static_cast<std::size_t>(options.jobs > 0 ? options.jobs
                                                         : hardware));
  auto work = [&]() {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= seeds.size()) return;
      SeedOutcome& outcome = outcomes[index];
      outcome.seed = seeds[index];
      if (deadline && std::chrono::steady_clock::now() > *deadline) {
        outcome.error = "skipped: time budget exhausted";
        continue;
      }
      try {
        outcome.report = runner(params_for(options, seeds[index]), deadline);
        outcome.verified = verify_cover(outcome.report->certificate).ok;
      } catch (const TimeBudgetExceeded&) {
        outcome.error = "unfinished: time budget exhausted";
      } catch (const std::exception& e) {
        outcome.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w + 1 < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  const SeedOutcome* best = nullptr;
  for (const SeedOutcome& outcome : outcomes) {
    if (!outcome.report || !outcome.verified) continue;
    if (!best || outcome.report->certificate.parts.size() <
                     best->report->certificate.parts.size()) {
      best = &outcome;
    }
  }

  json runs = json::array();
  for (const SeedOutcome& outcome : outcomes) {
    if (outcome.report) {
      json entry = run_report_to_json(outcome.report->run);
      entry["bound"] = outcome.report->bound;
      entry["verified"] = outcome.verified;
      json sizes = json::array();
      for (const auto& part : outcome.report->certificate.parts) {
        sizes.push_back(part.facet_subset.size());
      }
      entry["part_sizes"] = std::move(sizes);
      runs.push_back(std::move(entry));
      std::cout << "seed " << outcome.seed << ": bound "
                << outcome.report->bound << ", parts";
      for (const auto& part : outcome.report->certificate.parts) {
        std::cout << ' ' << part.facet_subset.size();
      }
      std::cout << (outcome.verified ? " (verified)" : " (NOT VERIFIED)")
                << ", " << outcome.report->elapsed_seconds << " s\n";
    } else {
      json entry;
      entry["seed"] = outcome.seed;
      entry["error"] = outcome.error;
      runs.push_back(std::move(entry));
      std::cout << "seed " << outcome.seed << ": " << outcome.error << "\n";
    }
  }

  json report;
  report["runs"] = std::move(runs);
  if (best) report["best_seed"] = best->seed;
  if (!options.report_path.empty() || !options.out.empty()) {
    const std::string path = options.report_path.empty()
                                 ? options.out + ".report.json"
                                 : options.report_path;
    write_text_file(path, report.dump(2) + "\n");
  }

  if (!best) {
    std::cerr << "no verified cover was produced\n";
    return kExitNoCover;
  }
  std::cout << "best: seed " << best->seed << ", bound "
            << best->report->bound << "\n";
  if (!options.out.empty()) {
    write_text_file(options.out,
                    cover_to_json(best->report->certificate, psi_spec,
                                  psi_prime_spec, domain_codec)
                            .dump(2) +
                        "\n");
  }
  return 0;
}

int cmd_estimate_sc(const EstimateOptions& options) {
  const ComplexPtr complex = make_complex(
      complex_from_json(load_json_file(options.input)).complex);
  if (!is_connected(*complex)) {
    throw std::invalid_argument("input complex is disconnected");
  }
  auto runner = [&](const SearchParams& params, const Deadline& deadline) {
    if (options.depth == 0) return estimate_sc(complex, params, deadline);
    ComplexPtr square = make_complex(ordered_product(*complex, *complex));
    auto [first, second] = projections(square, complex, complex,
                                       product_codec(*complex, *complex));
    return estimate_distance_subdivided(first, second, options.depth, params,
                                        deadline, max_facets_from_env());
  };
  // at depth zero the cover lives on the square itself: keep it usable as a
  // planner system
  if (options.depth == 0) {
    return run_estimate(options, runner, "pi1", "pi2",
                        complex->vertex_count());
  }
  return run_estimate(options, runner, std::nullopt, std::nullopt,
                      std::nullopt);
}

int cmd_estimate_cat(const EstimateOptions& options) {
  const ComplexPtr complex = make_complex(
      complex_from_json(load_json_file(options.input)).complex);
  auto runner = [&](const SearchParams& params, const Deadline& deadline) {
    if (options.depth == 0) {
      return estimate_cat(complex, options.base, params, deadline);
    }
    ComplexPtr square = make_complex(ordered_product(*complex, *complex));
    auto [first, second] = axial_inclusions(
        complex, square, product_codec(*complex, *complex), options.base);
    return estimate_distance_subdivided(first, second, options.depth, params,
                                        deadline, max_facets_from_env());
  };
  return run_estimate(options, runner, std::nullopt, std::nullopt,
                      std::nullopt);
}

int cmd_estimate_distance(const EstimateOptions& options) {
  const json j = load_json_file(options.input);
  if (!j.contains("domain") || !j.contains("codomain") ||
      !j.contains("phi") || !j.contains("phi_prime")) {
    throw std::invalid_argument(
        "map pair file needs domain, codomain, phi and phi_prime");
  }
  const ComplexFile domain_file = complex_from_json(j["domain"]);
  const ComplexFile codomain_file = complex_from_json(j["codomain"]);
  const ComplexPtr domain = make_complex(domain_file.complex);
  const ComplexPtr codomain = make_complex(codomain_file.complex);
  const SimplicialMap phi = map_from_spec(j["phi"], domain, codomain,
                                          domain_file.codec,
                                          codomain_file.codec);
  const SimplicialMap phi_prime =
      map_from_spec(j["phi_prime"], domain, codomain, domain_file.codec,
                    codomain_file.codec);
  auto runner = [&](const SearchParams& params, const Deadline& deadline) {
    if (options.depth == 0) {
      return estimate_distance(phi, phi_prime, params, deadline);
    }
    return estimate_distance_subdivided(phi, phi_prime, options.depth, params,
                                        deadline, max_facets_from_env());
  };
  return run_estimate(options, runner, std::nullopt, std::nullopt,
                      std::nullopt);
}

int cmd_verify(const std::string& kind, const std::string& path) {
  const json j = load_json_file(path);
  VerifyResult result;
  if (kind == "chain") {
    const ContiguityChain chain = chain_from_json(j);
    result = verify_chain(chain, chain.maps.front(), chain.maps.back());
  } else {
    result = verify_cover(cover_from_json(j));
  }
  if (!result.ok) {
    std::cerr << "verification failed: " << result.diagnostic << "\n";
    return kExitVerifyFailed;
  }
  std::cout << "ok\n";
  return 0;
}

int cmd_build_product(const std::string& left_path,
                      const std::string& right_path, const std::string& out) {
  const Complex left = complex_from_json(load_json_file(left_path)).complex;
  const Complex right = complex_from_json(load_json_file(right_path)).complex;
  Complex product = ordered_product(left, right);
  const ComplexFile file{
      std::move(product), right.vertex_count(),
      std::vector<std::string>{left_path, right_path}};
  write_text_file(out, complex_to_json(file).dump(2) + "\n");
  std::cout << "wrote " << out << " (" << file.complex.facet_count()
            << " facets)\n";
  return 0;
}

int cmd_build_subdivide(const std::string& path, int depth,
                        const std::string& out) {
  const ComplexPtr base =
      make_complex(complex_from_json(load_json_file(path)).complex);
  const SubdivisionTower tower =
      build_tower(base, depth, max_facets_from_env());
  const ComplexFile file{*tower.levels.back(), {}, {}};
  write_text_file(out, complex_to_json(file).dump(2) + "\n");
  std::cout << "wrote " << out << " (" << file.complex.facet_count()
            << " facets)\n";
  return 0;
}

int cmd_plan(const std::string& system_path, const std::string& a_spec,
             const std::string& b_spec, std::optional<int> part,
             const std::string& out) {
  const PlannerSystem system =
      planner_system_from_json(load_json_file(system_path));
  const BarycentricPoint a = parse_point(a_spec);
  const BarycentricPoint b = parse_point(b_spec);
  std::vector<BarycentricPoint> path;
  try {
    path = plan_path(system, a, b, part);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitVerifyFailed;
  }
  const json j = waypoints_to_json(path);
  if (!out.empty()) write_text_file(out, j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_export_table(const std::string& chain_path, const std::string& out) {
  const ContiguityChain chain = chain_from_json(load_json_file(chain_path));
  const std::string tsv = chain_to_tsv(chain);
  if (out.empty()) {
    std::cout << tsv;
  } else {
    write_text_file(out, tsv);
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contiguity distance estimation and piecewise linear motion "
               "planning on simplicial complexes"};
  app.require_subcommand(1);

  EstimateOptions options;
  std::string verify_path, left_path, right_path, out_path;
  std::string a_spec, b_spec, system_path;
  int depth = 1;
  int part_index = -1;

  CLI::App* estimate = app.add_subcommand("estimate", "run estimations");
  estimate->require_subcommand(1);
  CLI::App* est_sc = estimate->add_subcommand("sc", "simplicial complexity");
  est_sc->add_option("complex", options.input, "complex JSON file")
      ->required();
  CLI::App* est_cat =
      estimate->add_subcommand("cat", "Lusternik-Schnirelmann category");
  est_cat->add_option("complex", options.input, "complex JSON file")
      ->required();
  est_cat->add_option("--base", options.base, "axis vertex");
  CLI::App* est_dist =
      estimate->add_subcommand("distance", "contiguity distance");
  est_dist->add_option("pair", options.input, "map pair JSON file")
      ->required();
  for (CLI::App* cmd : {est_sc, est_cat, est_dist}) {
    add_estimate_flags(cmd, options);
  }

  CLI::App* verify = app.add_subcommand("verify", "verify certificates");
  verify->require_subcommand(1);
  CLI::App* verify_chain_cmd =
      verify->add_subcommand("chain", "check a contiguity chain");
  verify_chain_cmd->add_option("file", verify_path, "chain JSON")->required();
  CLI::App* verify_cover_cmd =
      verify->add_subcommand("cover", "check a cover certificate");
  verify_cover_cmd->add_option("file", verify_path, "cover JSON")->required();

  CLI::App* build = app.add_subcommand("build", "construct complexes");
  build->require_subcommand(1);
  CLI::App* build_product =
      build->add_subcommand("product", "ordered product of two complexes");
  build_product->add_option("left", left_path, "left factor JSON")->required();
  build_product->add_option("right", right_path, "right factor JSON")
      ->required();
  build_product->add_option("--out", out_path, "output path")->required();
  CLI::App* build_subdivide =
      build->add_subcommand("subdivide", "iterated barycentric subdivision");
  build_subdivide->add_option("complex", left_path, "complex JSON")
      ->required();
  build_subdivide->add_option("--depth", depth, "subdivision depth");
  build_subdivide->add_option("--out", out_path, "output path")->required();

  CLI::App* plan = app.add_subcommand("plan", "evaluate a motion planner");
  plan->add_option("--system", system_path, "verified cover JSON with codec")
      ->required();
  plan->add_option("--a", a_spec, "start point, e.g. 1 or 0,1:1/2,1/2")
      ->required();
  plan->add_option("--b", b_spec, "end point")->required();
  plan->add_option("--part", part_index, "force a local domain");
  plan->add_option("--out", out_path, "waypoints output path");

  CLI::App* export_table =
      app.add_subcommand("export-table", "render a chain as a TSV table");
  export_table->add_option("chain", verify_path, "chain JSON")->required();
  export_table->add_option("--out", out_path, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    // paper-style default for the simplicial complexity of small complexes
    if (est_sc->parsed() && est_sc->get_option("--t")->count() == 0) {
      options.target_parts = 2;
    }
    if (est_sc->parsed()) return cmd_estimate_sc(options);
    if (est_cat->parsed()) return cmd_estimate_cat(options);
    if (est_dist->parsed()) return cmd_estimate_distance(options);
    if (verify_chain_cmd->parsed()) return cmd_verify("chain", verify_path);
    if (verify_cover_cmd->parsed()) return cmd_verify("cover", verify_path);
    if (build_product->parsed()) {
      return cmd_build_product(left_path, right_path, out_path);
    }
    if (build_subdivide->parsed()) {
      return cmd_build_subdivide(left_path, depth, out_path);
    }
    if (plan->parsed()) {
      return cmd_plan(system_path, a_spec, b_spec,
                      part_index >= 0 ? std::optional<int>(part_index)
                                      : std::nullopt,
                      out_path);
    }
    if (export_table->parsed()) return cmd_export_table(verify_path, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
