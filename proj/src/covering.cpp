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

#include "contig/covering.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace contig {

namespace {

bool expired(const Deadline& deadline) {
  return deadline && std::chrono::steady_clock::now() > *deadline;
}

std::vector<Simplex> sorted_union(const std::vector<GrowState>& states,
                                  std::size_t from) {
  std::vector<Simplex> result;
  for (std::size_t k = from; k < states.size(); ++k) {
    result.insert(result.end(), states[k].part.begin(), states[k].part.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Deterministic shortest path in the codomain 1-skeleton: repeatedly step to
// the smallest-label neighbor that is one unit closer to the target.
std::vector<VertexId> skeleton_path(const Complex& codomain,
                                    const DistanceTable& dist, VertexId from,
                                    VertexId to) {
  std::vector<VertexId> path{from};
  VertexId at = from;
  while (at != to) {
    const int remaining = dist(at, to);
    for (VertexId next : codomain.vertices()) {
      if (next == at) continue;
      Simplex edge{std::min(at, next), std::max(at, next)};
      if (codomain.is_simplex(edge) && dist(next, to) == remaining - 1) {
        at = next;
        path.push_back(at);
        break;
      }
    }
  }
  return path;
}

void validate_sources(const SimplicialMap& psi,
                      const SimplicialMap& psi_prime) {
  if (!psi.same_endpoints_as(psi_prime)) {
    throw std::invalid_argument("source maps must share domain and codomain");
  }
  if (!is_simplicial(psi) || !is_simplicial(psi_prime)) {
    throw std::invalid_argument("source maps must be simplicial");
  }
}

void validate_state(const GrowState& state, const SimplicialMap& psi,
                    const SimplicialMap& psi_prime) {
  if (state.part.empty() || !state.subcomplex) {
    throw std::invalid_argument("start state has no facets");
  }
  const Complex rebuilt =
      generated_subcomplex(*psi.domain(), state.part);
  if (rebuilt != *state.subcomplex) {
    throw std::invalid_argument(
        "start state subcomplex does not match its facet set");
  }
  const VerifyResult r =
      verify_chain(state.chain, psi.restrict_to(state.subcomplex),
                   psi_prime.restrict_to(state.subcomplex));
  if (!r) {
    throw std::invalid_argument("start state chain does not verify: " +
                                r.diagnostic);
  }
}

}  // namespace

GrowState single_facet_state(const SimplicialMap& psi,
                             const SimplicialMap& psi_prime,
                             const Simplex& facet, const DistanceTable& dist) {
  ComplexPtr sub =
      make_complex(generated_subcomplex(*psi.domain(), {facet}));
  const SimplicialMap start = psi.restrict_to(sub);
  const SimplicialMap goal = psi_prime.restrict_to(sub);

  // On a one-facet subcomplex any map can be contracted to a constant, and
  // constants at adjacent vertices are 1-contiguous, so walking a constant
  // along a shortest path always yields a chain.
  ContiguityChain chain;
  chain.maps.push_back(start);
  const VertexId from = start.image(facet).front();
  const VertexId to = goal.image(facet).front();
  for (VertexId stop : skeleton_path(*psi.codomain(), dist, from, to)) {
    chain.maps.push_back(constant_map(sub, psi.codomain(), stop));
  }
  chain.maps.push_back(goal);
  return GrowState{{facet}, sub, reduce(chain)};
}

GrowState add_facet(const GrowState& state, const SimplicialMap& psi,
                    const SimplicialMap& psi_prime, const SearchParams& params,
                    Rng& rng, const DistanceTable& dist) {
  const Complex& ambient = *psi.domain();
  std::vector<Simplex> outside;
  outside.reserve(ambient.facets().size());
  for (const Simplex& f : ambient.facets()) {
    if (!std::binary_search(state.part.begin(), state.part.end(), f)) {
      outside.push_back(f);
    }
  }
  while (!outside.empty()) {
    const std::size_t pick = rng.uniform_index(outside.size());
    const Simplex candidate = outside[pick];

    std::vector<Simplex> grown = state.part;
    grown.insert(
        std::upper_bound(grown.begin(), grown.end(), candidate), candidate);
    ComplexPtr sub = make_complex(generated_subcomplex(ambient, grown));
    auto chain = local_search(psi.restrict_to(sub), psi_prime.restrict_to(sub),
                              params, rng, &dist);
    if (chain) {
      return GrowState{std::move(grown), std::move(sub), reduce(*chain)};
    }
    outside.erase(outside.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return state;
}

namespace {

GrowState grow_until_stuck(GrowState state, const SimplicialMap& psi,
                           const SimplicialMap& psi_prime,
                           const SearchParams& params, Rng& rng,
                           const DistanceTable& dist) {
  const int rounds = psi.domain()->facet_count();
  for (int round = 0; round < rounds; ++round) {
    GrowState next = add_facet(state, psi, psi_prime, params, rng, dist);
    if (next.part.size() == state.part.size()) break;
    state = std::move(next);
  }
  return state;
}

}  // namespace

GrowState rcc(const SimplicialMap& psi, const SimplicialMap& psi_prime,
              const SearchParams& params, Rng& rng,
              const DistanceTable& dist) {
  validate_sources(psi, psi_prime);
  const auto& facets = psi.domain()->facets();
  const Simplex& seed = facets[rng.uniform_index(facets.size())];
  GrowState state = single_facet_state(psi, psi_prime, seed, dist);
  return grow_until_stuck(std::move(state), psi, psi_prime, params, rng, dist);
}

GrowState add_facets(const GrowState& start, const SimplicialMap& psi,
                     const SimplicialMap& psi_prime, const SearchParams& params,
                     Rng& rng, const DistanceTable& dist) {
  validate_sources(psi, psi_prime);
  validate_state(start, psi, psi_prime);
  return grow_until_stuck(start, psi, psi_prime, params, rng, dist);
}

namespace {

std::vector<GrowState> covering_states(const SimplicialMap& psi,
                                       const SimplicialMap& psi_prime,
                                       const SearchParams& params, Rng& rng,
                                       const DistanceTable& dist,
                                       const Deadline& deadline) {
  const Complex& domain = *psi.domain();
  std::vector<Simplex> uncovered = domain.facets();
  std::set<Simplex> covered;
  std::vector<GrowState> parts;
  while (!uncovered.empty()) {
    if (expired(deadline)) throw TimeBudgetExceeded();
    ComplexPtr remaining =
        make_complex(generated_subcomplex(domain, uncovered));
    GrowState state = rcc(psi.restrict_to(remaining),
                          psi_prime.restrict_to(remaining), params, rng, dist);
    // Alg. 4 intersects with the domain facets and removes anything already
    // covered; with facet-generated subcomplexes this is the identity, but we
    // keep the guard literal.
    std::vector<Simplex> fresh;
    for (const Simplex& f : state.part) {
      if (std::binary_search(domain.facets().begin(), domain.facets().end(),
                             f) &&
          covered.find(f) == covered.end()) {
        fresh.push_back(f);
      }
    }
    if (fresh.size() != state.part.size()) {
      ComplexPtr sub = make_complex(generated_subcomplex(domain, fresh));
      state = GrowState{fresh, sub, restrict_chain(state.chain, sub)};
    }
    covered.insert(fresh.begin(), fresh.end());
    std::vector<Simplex> still;
    for (const Simplex& f : uncovered) {
      if (covered.find(f) == covered.end()) still.push_back(f);
    }
    uncovered = std::move(still);
    parts.push_back(std::move(state));
  }
  return parts;
}

CoverCertificate to_certificate(const SimplicialMap& psi,
                                const SimplicialMap& psi_prime,
                                std::vector<GrowState> parts) {
  CoverCertificate certificate{psi.domain(), psi, psi_prime, {}};
  certificate.parts.reserve(parts.size());
  for (GrowState& state : parts) {
    certificate.parts.push_back(
        CoverPart{std::move(state.part), std::move(state.chain)});
  }
  return certificate;
}

void check_partition(const std::vector<GrowState>& parts,
                     const Complex& domain) {
  std::set<Simplex> seen;
  std::size_t total = 0;
  for (const GrowState& state : parts) {
    total += state.part.size();
    seen.insert(state.part.begin(), state.part.end());
  }
  if (total != seen.size() || seen.size() != domain.facets().size()) {
    throw std::logic_error(
        "internal error: rebuilt partition is not an exact facet partition");
  }
}

}  // namespace

CoverCertificate covering(const SimplicialMap& psi,
                          const SimplicialMap& psi_prime,
                          const SearchParams& params, Rng& rng,
                          const Deadline& deadline) {
  params.validate();
  validate_sources(psi, psi_prime);
  const DistanceTable dist = all_pairs_skeleton_distances(*psi.codomain());
  return to_certificate(
      psi, psi_prime,
      covering_states(psi, psi_prime, params, rng, dist, deadline));
}

CoverCertificate optimized_covering(const SimplicialMap& psi,
                                    const SimplicialMap& psi_prime,
                                    const SearchParams& params, Rng& rng,
                                    const Deadline& deadline,
                                    RunReport* report) {
  params.validate();
  validate_sources(psi, psi_prime);
  const auto started = std::chrono::steady_clock::now();
  const DistanceTable dist = all_pairs_skeleton_distances(*psi.codomain());
  const Complex& domain = *psi.domain();

  std::vector<GrowState> parts =
      covering_states(psi, psi_prime, params, rng, dist, deadline);

  int iterations = 0;
  std::vector<std::vector<int>> history;
  std::size_t cursor = 0;  // the control index j of the optimization loop
  while (iterations < params.optimize_rounds &&
         parts.size() > static_cast<std::size_t>(params.target_parts)) {
    if (expired(deadline)) break;  // the current partition is already valid
    ++iterations;
    const std::vector<GrowState> previous = parts;

    // (1) Largest parts first; lexicographic facet-set tiebreak keeps the
    // order deterministic.
    std::stable_sort(parts.begin(), parts.end(),
                     [](const GrowState& a, const GrowState& b) {
                       if (a.part.size() != b.part.size()) {
                         return a.part.size() > b.part.size();
                       }
                       return a.part < b.part;
                     });

    // (2) Regrow inside the tail starting at the cursor; keep whichever of
    // the regrown set and the cursor part is larger (ties go to the fresh
    // one, preserving the new randomization).
    const std::vector<Simplex> tail = sorted_union(parts, cursor);
    ComplexPtr tail_sub = make_complex(generated_subcomplex(domain, tail));
    GrowState grown = rcc(psi.restrict_to(tail_sub),
                          psi_prime.restrict_to(tail_sub), params, rng, dist);
    if (parts[cursor].part.size() > grown.part.size()) {
      grown = parts[cursor];
    }

    // (3) Extend into the tail widened by one part on the left.
    const std::size_t wide_from = cursor > 0 ? cursor - 1 : 0;
    const std::vector<Simplex> wide = sorted_union(parts, wide_from);
    ComplexPtr wide_sub = make_complex(generated_subcomplex(domain, wide));
    GrowState merged =
        add_facets(grown, psi.restrict_to(wide_sub),
                   psi_prime.restrict_to(wide_sub), params, rng, dist);
    if (cursor > 0 && parts[cursor - 1].part.size() > merged.part.size()) {
      merged = parts[cursor - 1];
    }

    // Rebuild: untouched prefix, the merged part, then what is left of every
    // part from index cursor-1 on, with empty leftovers dropped.
    std::set<Simplex> absorbed(merged.part.begin(), merged.part.end());
    std::vector<GrowState> rebuilt;
    for (std::size_t k = 0; k + 1 < cursor; ++k) rebuilt.push_back(parts[k]);
    rebuilt.push_back(merged);
    for (std::size_t k = wide_from; k < parts.size(); ++k) {
      std::vector<Simplex> leftover;
      for (const Simplex& f : parts[k].part) {
        if (absorbed.find(f) == absorbed.end()) leftover.push_back(f);
      }
      if (leftover.empty()) continue;
      if (leftover.size() == parts[k].part.size()) {
        rebuilt.push_back(parts[k]);
        continue;
      }
      ComplexPtr sub = make_complex(generated_subcomplex(domain, leftover));
      rebuilt.push_back(GrowState{std::move(leftover), sub,
                                  restrict_chain(parts[k].chain, sub)});
    }
    check_partition(rebuilt, domain);

    // Roll back rebuilds that grew the partition.
    if (previous.size() < rebuilt.size()) {
      parts = previous;
    } else {
      parts = std::move(rebuilt);
    }

    ++cursor;
    if (cursor >= parts.size()) cursor = 0;

    history.emplace_back();
    for (const GrowState& state : parts) {
      history.back().push_back(static_cast<int>(state.part.size()));
    }
  }

  if (report) {
    report->seed = params.seed;
    report->params = params;
    report->iterations_used = iterations;
    report->part_sizes_history = std::move(history);
    report->elapsed_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started)
            .count();
  }
  return to_certificate(psi, psi_prime, std::move(parts));
}

}  // namespace contig
