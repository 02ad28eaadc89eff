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

#ifndef CONTIG_SIMPLICIAL_MAP_HPP_
#define CONTIG_SIMPLICIAL_MAP_HPP_

#include <utility>
#include <vector>

#include "contig/complex.hpp"

namespace contig {

/// A vertex map between two complexes. Simpliciality is a checkable property
/// (see contiguity.hpp), not an invariant: the search deliberately probes raw
/// vertex maps.
class SimplicialMap {
 public:
  /// `values` assigns an image to each domain vertex, aligned with
  /// domain->vertices(). Throws std::invalid_argument on size mismatch or
  /// images outside the codomain.
  SimplicialMap(ComplexPtr domain, ComplexPtr codomain,
                std::vector<VertexId> values);

  const ComplexPtr& domain() const { return domain_; }
  const ComplexPtr& codomain() const { return codomain_; }
  const std::vector<VertexId>& values() const { return values_; }

  /// Image of the domain vertex `v`.
  VertexId apply(VertexId v) const {
    return values_[static_cast<std::size_t>(domain_->vertex_index(v))];
  }

  /// Image of a simplex: sorted distinct images of its vertices.
  Simplex image(const Simplex& s) const;

  /// Restriction to a subcomplex of the domain (labels preserved).
  SimplicialMap restrict_to(ComplexPtr subcomplex) const;

  /// True iff both maps have structurally equal endpoints and assignments.
  bool operator==(const SimplicialMap& other) const;
  bool operator!=(const SimplicialMap& other) const {
    return !(*this == other);
  }

  /// True iff both endpoints are the same complexes (pointer or structural).
  bool same_endpoints_as(const SimplicialMap& other) const;

 private:
  ComplexPtr domain_;
  ComplexPtr codomain_;
  std::vector<VertexId> values_;
};

SimplicialMap identity_map(ComplexPtr complex);

SimplicialMap constant_map(ComplexPtr domain, ComplexPtr codomain,
                           VertexId value);

/// outer(inner(v)); inner's codomain must equal outer's domain.
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// The two simplicial projections of an ordered product built with `codec`.
std::pair<SimplicialMap, SimplicialMap> projections(
    ComplexPtr product, ComplexPtr factor_left, ComplexPtr factor_right,
    const ProductVertexCodec& codec);

/// Axial inclusions v -> (v, base) and v -> (base, v) into the ordered square
/// of `complex`. Throws if `base` is not a vertex.
std::pair<SimplicialMap, SimplicialMap> axial_inclusions(
    ComplexPtr complex, ComplexPtr square, const ProductVertexCodec& codec,
    VertexId base);

/// Which vertex of the underlying simplex each barycenter is sent to by an
/// approximation of the identity.
enum class VertexRule { kMinLabel, kMaxLabel };

/// Simplicial approximation Sd(K) -> K of the identity: every barycenter maps
/// to a vertex of its simplex (min-label by default, which keeps runs
/// reproducible). Throws if the subdivision table does not match `base`.
SimplicialMap approximation_of_identity(const Subdivision& subdivision,
                                        ComplexPtr subdivided, ComplexPtr base,
                                        VertexRule rule = VertexRule::kMinLabel);

}  // namespace contig

#endif  // CONTIG_SIMPLICIAL_MAP_HPP_
