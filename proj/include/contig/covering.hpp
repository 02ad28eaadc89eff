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

#ifndef CONTIG_COVERING_HPP_
#define CONTIG_COVERING_HPP_

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "contig/search.hpp"
#include "contig/verify.hpp"

namespace contig {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Thrown when a time budget expires before any valid cover exists.
struct TimeBudgetExceeded : std::runtime_error {
  TimeBudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

/// A contiguity subcomplex under construction: the generating facet subset of
/// the ambient domain, the subcomplex itself, and the latest reduced chain
/// between the restrictions of the two source maps.
struct GrowState {
  std::vector<Simplex> part;
  ComplexPtr subcomplex;
  ContiguityChain chain;
};

/// Seed state generated by a single facet. The chain walks the images through
/// a constant map and along a shortest 1-skeleton path, then gets reduced;
/// on a one-facet subcomplex this always succeeds when the codomain is
/// connected, which is what guarantees covering() terminates.
GrowState single_facet_state(const SimplicialMap& psi,
                             const SimplicialMap& psi_prime,
                             const Simplex& facet, const DistanceTable& dist);

/// One growth attempt: scans the ambient facets outside the state in random
/// order and returns the first enlargement on which local_search finds a
/// chain (stored reduced). Returns the input state unchanged when no facet
/// can be added.
GrowState add_facet(const GrowState& state, const SimplicialMap& psi,
                    const SimplicialMap& psi_prime, const SearchParams& params,
                    Rng& rng, const DistanceTable& dist);

/// Random contiguity subcomplex: add_facet iterated from a uniformly random
/// facet of the domain of `psi`, stopping when a round adds nothing.
GrowState rcc(const SimplicialMap& psi, const SimplicialMap& psi_prime,
              const SearchParams& params, Rng& rng, const DistanceTable& dist);

/// Same iteration as rcc but seeded with a caller-provided state, which must
/// carry a chain that verifies. Never shrinks the facet set.
GrowState add_facets(const GrowState& start, const SimplicialMap& psi,
                     const SimplicialMap& psi_prime, const SearchParams& params,
                     Rng& rng, const DistanceTable& dist);

/// Facet partition of the domain of psi by contiguity subcomplexes: rcc on
/// whatever is still uncovered, repeated until nothing is left. Each round
/// covers at least the seed facet, so this always terminates.
CoverCertificate covering(const SimplicialMap& psi,
                          const SimplicialMap& psi_prime,
                          const SearchParams& params, Rng& rng,
                          const Deadline& deadline = std::nullopt);

/// Per-run telemetry emitted next to certificates.
struct RunReport {
  std::uint64_t seed = 0;
  SearchParams params;
  int iterations_used = 0;
  std::vector<std::vector<int>> part_sizes_history;
  double elapsed_ms = 0.0;
};

/// Starts from covering() and greedily regrows large parts to swallow small
/// ones, for at most optimize_rounds iterations or until at most target_parts
/// parts remain. A rebuilt partition that grew is rolled back, so the part
/// count never increases. A deadline, once covering() has produced a
/// partition, stops optimizing and returns the current (valid) partition.
CoverCertificate optimized_covering(const SimplicialMap& psi,
                                    const SimplicialMap& psi_prime,
                                    const SearchParams& params, Rng& rng,
                                    const Deadline& deadline = std::nullopt,
                                    RunReport* report = nullptr);

}  // namespace contig

#endif  // CONTIG_COVERING_HPP_
