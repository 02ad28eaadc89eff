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

#ifndef CONTIG_SEARCH_HPP_
#define CONTIG_SEARCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "contig/contiguity.hpp"
#include "contig/rng.hpp"

namespace contig {

enum class SearchVariant {
  // Propose a uniformly random value at a uniformly random vertex, then test
  // contiguity to the current map.
  kBasic,
  // Enumerate every contiguous single-vertex variant at a random vertex and
  // draw the proposal from that list; an empty list skips the iteration but
  // still consumes one of the max_iterations tries.
  kNeighborhood,
};

/// All the knobs of a randomized run in one place.
struct SearchParams {
  int max_iterations = 1000;        // M: walk budget per local search
  double accept_probability = 0.1;  // r: chance to accept a non-improving step
  int optimize_rounds = 500;        // N: outer iterations of the optimizer
  int target_parts = 1;             // t: stop optimizing at this many parts
  SearchVariant variant = SearchVariant::kNeighborhood;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Every simplicial map equal to `map` except at `vertex`, and 1-contiguous
/// to it; for a simplicial `map` the contiguity requirement already forces
/// simpliciality. Candidates come out in ascending order of the new value.
/// May be empty.
std::vector<SimplicialMap> candidate_moves(const SimplicialMap& map,
                                           VertexId vertex);

/// Randomized walk from `start` towards `goal` through single-vertex moves.
///
/// If the two maps are already 1-contiguous the two-element chain is returned
/// immediately. Otherwise each of at most max_iterations tries proposes a
/// single-vertex variant of the current map and accepts it when it is
/// contiguous to the current map and either a fresh uniform draw falls below
/// accept_probability or the proposal is strictly closer to `goal` in
/// summed 1-skeleton distance. Returns std::nullopt when the walk never
/// reaches `goal`; partial progress is discarded.
///
/// Draws happen in a fixed order per iteration (vertex, value, then the
/// acceptance probability), so a seed fully determines the trace.
/// `codomain_distances` may be precomputed; pass nullptr to compute it here.
/// `trace` (optional) receives one JSON line per iteration.
std::optional<ContiguityChain> local_search(
    const SimplicialMap& start, const SimplicialMap& goal,
    const SearchParams& params, Rng& rng,
    const DistanceTable* codomain_distances = nullptr,
    std::ostream* trace = nullptr);

/// Greedy far-jump compression: from each kept map, jump to the latest chain
/// member still 1-contiguous to it. Keeps endpoints, never lengthens. Throws
/// std::invalid_argument when the input fails verification.
ContiguityChain reduce(const ContiguityChain& chain);

/// Iterates reduce until the length stops shrinking. A single pass is not
/// always idempotent because a far jump can enable further jumps.
ContiguityChain reduce_to_fixpoint(const ContiguityChain& chain);

}  // namespace contig

#endif  // CONTIG_SEARCH_HPP_
