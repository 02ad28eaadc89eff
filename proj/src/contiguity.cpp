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

#include "contig/contiguity.hpp"

#include <algorithm>
#include <stdexcept>

namespace contig {

namespace {

// Image of `facet` under f joined with its image under g, as a sorted set.
Simplex joint_image(const SimplicialMap& f, const SimplicialMap& g,
                    const Simplex& facet) {
  Simplex img;
  img.reserve(2 * facet.size());
  for (VertexId v : facet) {
    img.push_back(f.apply(v));
    img.push_back(g.apply(v));
  }
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

}  // namespace

bool is_simplicial(const SimplicialMap& f) {
  const Complex& codomain = *f.codomain();
  for (const Simplex& facet : f.domain()->facets()) {
    if (!codomain.is_simplex(f.image(facet))) return false;
  }
  return true;
}

bool contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  if (!f.same_endpoints_as(g)) {
    throw std::invalid_argument(
        "contiguous: maps must share domain and codomain");
  }
  const Complex& codomain = *f.codomain();
  for (const Simplex& facet : f.domain()->facets()) {
    if (!codomain.is_simplex(joint_image(f, g, facet))) return false;
  }
  return true;
}

long long map_distance(const SimplicialMap& f, const SimplicialMap& g,
                       const DistanceTable& dist) {
  if (!f.same_endpoints_as(g)) {
    throw std::invalid_argument(
        "map_distance: maps must share domain and codomain");
  }
  long long total = 0;
  const auto& fv = f.values();
  const auto& gv = g.values();
  for (std::size_t i = 0; i < fv.size(); ++i) total += dist(fv[i], gv[i]);
  return total;
}

bool single_vertex_move_ok(const SimplicialMap& f, VertexId v,
                           VertexId new_value) {
  const Complex& domain = *f.domain();
  const Complex& codomain = *f.codomain();
  Simplex joined;
  for (int fi : domain.facets_containing(v)) {
    const Simplex& facet = domain.facets()[fi];
    joined.clear();
    joined.reserve(facet.size() + 1);
    for (VertexId u : facet) joined.push_back(f.apply(u));
    joined.push_back(new_value);
    std::sort(joined.begin(), joined.end());
    joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
    if (!codomain.is_simplex(joined)) return false;
  }
  return true;
}

ContiguityChain restrict_chain(const ContiguityChain& chain,
                               ComplexPtr subcomplex) {
  ContiguityChain restricted;
  restricted.maps.reserve(chain.maps.size());
  for (const SimplicialMap& map : chain.maps) {
    restricted.maps.push_back(map.restrict_to(subcomplex));
  }
  return restricted;
}

}  // namespace contig
