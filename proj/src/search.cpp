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

#include "contig/search.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "contig/verify.hpp"

namespace contig {

void SearchParams::validate() const {
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be at least 1");
  }
  if (accept_probability < 0.0 || accept_probability > 1.0) {
    throw std::invalid_argument("accept_probability must lie in [0, 1]");
  }
  if (optimize_rounds < 0) {
    throw std::invalid_argument("optimize_rounds must be non-negative");
  }
  if (target_parts < 1) {
    throw std::invalid_argument("target_parts must be at least 1");
  }
}

std::vector<SimplicialMap> candidate_moves(const SimplicialMap& map,
                                           VertexId vertex) {
  if (map.domain()->vertex_index(vertex) < 0) {
    throw std::invalid_argument("vertex " + std::to_string(vertex) +
                                " is not in the domain");
  }
  const VertexId current = map.apply(vertex);
  std::vector<SimplicialMap> moves;
  for (VertexId value : map.codomain()->vertices()) {
    if (value == current) continue;
    if (!single_vertex_move_ok(map, vertex, value)) continue;
    std::vector<VertexId> values = map.values();
    values[static_cast<std::size_t>(map.domain()->vertex_index(vertex))] =
        value;
    moves.emplace_back(map.domain(), map.codomain(), std::move(values));
  }
  return moves;
}

namespace {

void emit_trace(std::ostream* trace, int iteration, VertexId vertex,
                bool accepted, long long distance) {
  if (!trace) return;
  *trace << "{\"i\":" << iteration << ",\"vertex\":" << vertex
         << ",\"accepted\":" << (accepted ? "true" : "false")
         << ",\"d\":" << distance << "}\n";
}

ContiguityChain materialize(const SimplicialMap& start,
                            const std::vector<std::vector<VertexId>>& steps) {
  ContiguityChain chain;
  chain.maps.reserve(steps.size());
  for (const auto& values : steps) {
    chain.maps.emplace_back(start.domain(), start.codomain(), values);
  }
  return chain;
}

}  // namespace

std::optional<ContiguityChain> local_search(const SimplicialMap& start,
                                            const SimplicialMap& goal,
                                            const SearchParams& params,
                                            Rng& rng,
                                            const DistanceTable* codomain_distances,
                                            std::ostream* trace) {
  params.validate();
  if (!start.same_endpoints_as(goal)) {
    throw std::invalid_argument(
        "local_search: maps must share domain and codomain");
  }
  if (!is_simplicial(start) || !is_simplicial(goal)) {
    throw std::invalid_argument("local_search: both input maps must be "
                                "simplicial");
  }

  if (contiguous(start, goal)) {
    ContiguityChain chain;
    chain.maps = {start, goal};
    return chain;
  }

  DistanceTable local_table =
      codomain_distances ? DistanceTable({}, {})
                         : all_pairs_skeleton_distances(*start.codomain());
  const DistanceTable& dist =
      codomain_distances ? *codomain_distances : local_table;

  const Complex& domain = *start.domain();
  const Complex& codomain = *start.codomain();
  const auto& domain_vertices = domain.vertices();
  const auto& codomain_vertices = codomain.vertices();
  const auto& goal_values = goal.values();

  std::vector<VertexId> current = start.values();
  long long current_distance = 0;
  for (std::size_t i = 0; i < current.size(); ++i) {
    current_distance += dist(current[i], goal_values[i]);
  }

  std::vector<std::vector<VertexId>> accepted_steps{current};

  SimplicialMap scratch = start;  // rebuilt on demand for candidate_moves
  for (int iteration = 1; iteration <= params.max_iterations; ++iteration) {
    const std::size_t vi = rng.uniform_index(domain_vertices.size());
    const VertexId vertex = domain_vertices[vi];

    VertexId proposal = -1;
    bool proposal_contiguous = false;
    if (params.variant == SearchVariant::kBasic) {
      // Uniform over codomain values other than the current image.
      const int cur_idx = codomain.vertex_index(current[vi]);
      std::size_t draw = rng.uniform_index(codomain_vertices.size() - 1);
      if (draw >= static_cast<std::size_t>(cur_idx)) ++draw;
      proposal = codomain_vertices[draw];
      scratch = SimplicialMap(start.domain(), start.codomain(), current);
      proposal_contiguous = single_vertex_move_ok(scratch, vertex, proposal);
    } else {
      scratch = SimplicialMap(start.domain(), start.codomain(), current);
      std::vector<VertexId> options;
      for (VertexId value : codomain_vertices) {
        if (value == current[vi]) continue;
        if (single_vertex_move_ok(scratch, vertex, value)) {
          options.push_back(value);
        }
      }
      if (options.empty()) {
        emit_trace(trace, iteration, vertex, false, current_distance);
        continue;  // the try is spent, keeping max_iterations an honest budget
      }
      proposal = options[rng.uniform_index(options.size())];
      proposal_contiguous = true;
    }

    const double p = rng.uniform_real();
    const long long delta = dist(proposal, goal_values[vi]) -
                            dist(current[vi], goal_values[vi]);
    const bool take = proposal_contiguous &&
                      (p < params.accept_probability || delta < 0);
    if (take) {
      current[vi] = proposal;
      current_distance += delta;
      accepted_steps.push_back(current);
      if (current == goal_values) {
        emit_trace(trace, iteration, vertex, true, current_distance);
        return materialize(start, accepted_steps);
      }
    }
    emit_trace(trace, iteration, vertex, take, current_distance);
  }
  return std::nullopt;
}

ContiguityChain reduce(const ContiguityChain& chain) {
  if (chain.maps.empty()) {
    throw std::invalid_argument("reduce: chain has no maps");
  }
  if (VerifyResult r =
          verify_chain(chain, chain.maps.front(), chain.maps.back());
      !r) {
    throw std::invalid_argument("reduce: input is not a valid chain: " +
                                r.diagnostic);
  }
  const int last = chain.length();
  ContiguityChain out;
  out.maps.push_back(chain.maps.front());
  int j = 0;
  while (j != last) {
    int i = last;
    while (!contiguous(chain.maps[static_cast<std::size_t>(j)],
                       chain.maps[static_cast<std::size_t>(i)])) {
      --i;
    }
    out.maps.push_back(chain.maps[static_cast<std::size_t>(i)]);
    j = i;
  }
  return out;
}

ContiguityChain reduce_to_fixpoint(const ContiguityChain& chain) {
  ContiguityChain current = reduce(chain);
  for (;;) {
    ContiguityChain next = reduce(current);
    if (next.maps.size() == current.maps.size()) return current;
    current = std::move(next);
  }
}

}  // namespace contig
