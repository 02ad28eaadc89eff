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

#ifndef CONTIG_CONTIGUITY_HPP_
#define CONTIG_CONTIGUITY_HPP_

#include <vector>

#include "contig/complex.hpp"
#include "contig/simplicial_map.hpp"

namespace contig {

/// True iff the image of every domain facet is a simplex of the codomain.
bool is_simplicial(const SimplicialMap& f);

/// 1-contiguity: f(s) ∪ g(s) is a simplex of the codomain for every domain
/// facet s. Quantifying over facets suffices, since faces inherit the
/// condition. Returns false (never throws) when either map fails to be
/// simplicial, so raw vertex maps can be probed; throws std::invalid_argument
/// only on mismatched endpoints.
bool contiguous(const SimplicialMap& f, const SimplicialMap& g);

/// Sum over domain vertices of the codomain 1-skeleton distance between the
/// two images. `dist` must be the table of the shared codomain.
long long map_distance(const SimplicialMap& f, const SimplicialMap& g,
                       const DistanceTable& dist);

/// Checks the single-vertex variant of `f` that sends `v` to `new_value`:
/// contiguity of the variant to `f` reduces to f(s) ∪ {new_value} being a
/// simplex for every facet s containing v. For simplicial `f` this also makes
/// the variant simplicial.
bool single_vertex_move_ok(const SimplicialMap& f, VertexId v,
                           VertexId new_value);

/// A certificate of c-contiguity: simplicial maps with consecutive members
/// 1-contiguous. Invariants are checked by verify_chain, not on construction.
struct ContiguityChain {
  std::vector<SimplicialMap> maps;

  int length() const { return static_cast<int>(maps.size()) - 1; }
};

/// Restriction of every chain map to a subcomplex of the shared domain.
/// Valid chains stay valid: the subcomplex's facets are a subset of faces
/// already covered by the facet condition.
ContiguityChain restrict_chain(const ContiguityChain& chain,
                               ComplexPtr subcomplex);

}  // namespace contig

#endif  // CONTIG_CONTIGUITY_HPP_
