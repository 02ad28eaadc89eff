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

#include "contig/simplicial_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace contig {

SimplicialMap::SimplicialMap(ComplexPtr domain, ComplexPtr codomain,
                             std::vector<VertexId> values)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      values_(std::move(values)) {
  if (!domain_ || !codomain_) {
    throw std::invalid_argument("map endpoints must be non-null");
  }
  if (values_.size() != domain_->vertices().size()) {
    throw std::invalid_argument(
        "assignment must cover every domain vertex: expected " +
        std::to_string(domain_->vertices().size()) + " values, got " +
        std::to_string(values_.size()));
  }
  for (VertexId w : values_) {
    if (codomain_->vertex_index(w) < 0) {
      throw std::invalid_argument("image vertex " + std::to_string(w) +
                                  " is not in the codomain");
    }
  }
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex img;
  img.reserve(s.size());
  for (VertexId v : s) img.push_back(apply(v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

SimplicialMap SimplicialMap::restrict_to(ComplexPtr subcomplex) const {
  std::vector<VertexId> values;
  values.reserve(subcomplex->vertices().size());
  for (VertexId v : subcomplex->vertices()) {
    if (domain_->vertex_index(v) < 0) {
      throw std::invalid_argument("restriction target has vertex " +
                                  std::to_string(v) +
                                  " outside the original domain");
    }
    values.push_back(apply(v));
  }
  return SimplicialMap(std::move(subcomplex), codomain_, std::move(values));
}

bool SimplicialMap::operator==(const SimplicialMap& other) const {
  return same_endpoints_as(other) && values_ == other.values_;
}

bool SimplicialMap::same_endpoints_as(const SimplicialMap& other) const {
  const bool domains_match =
      domain_ == other.domain_ || *domain_ == *other.domain_;
  const bool codomains_match =
      codomain_ == other.codomain_ || *codomain_ == *other.codomain_;
  return domains_match && codomains_match;
}

SimplicialMap identity_map(ComplexPtr complex) {
  std::vector<VertexId> values = complex->vertices();
  return SimplicialMap(complex, complex, std::move(values));
}

SimplicialMap constant_map(ComplexPtr domain, ComplexPtr codomain,
                           VertexId value) {
  std::vector<VertexId> values(domain->vertices().size(), value);
  return SimplicialMap(std::move(domain), std::move(codomain),
                       std::move(values));
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (*inner.codomain() != *outer.domain()) {
    throw std::invalid_argument(
        "compose: inner codomain does not match outer domain");
  }
  std::vector<VertexId> values;
  values.reserve(inner.values().size());
  for (VertexId mid : inner.values()) values.push_back(outer.apply(mid));
  return SimplicialMap(inner.domain(), outer.codomain(), std::move(values));
}

std::pair<SimplicialMap, SimplicialMap> projections(
    ComplexPtr product, ComplexPtr factor_left, ComplexPtr factor_right,
    const ProductVertexCodec& codec) {
  std::vector<VertexId> first, second;
  first.reserve(product->vertices().size());
  second.reserve(product->vertices().size());
  for (VertexId v : product->vertices()) {
    first.push_back(codec.left_of(v));
    second.push_back(codec.right_of(v));
  }
  return {SimplicialMap(product, std::move(factor_left), std::move(first)),
          SimplicialMap(product, std::move(factor_right), std::move(second))};
}

std::pair<SimplicialMap, SimplicialMap> axial_inclusions(
    ComplexPtr complex, ComplexPtr square, const ProductVertexCodec& codec,
    VertexId base) {
  if (complex->vertex_index(base) < 0) {
    throw std::invalid_argument("base vertex " + std::to_string(base) +
                                " is not in the complex");
  }
  std::vector<VertexId> first, second;
  first.reserve(complex->vertices().size());
  second.reserve(complex->vertices().size());
  for (VertexId v : complex->vertices()) {
    first.push_back(codec.encode(v, base));
    second.push_back(codec.encode(base, v));
  }
  return {SimplicialMap(complex, square, std::move(first)),
          SimplicialMap(complex, std::move(square), std::move(second))};
}

SimplicialMap approximation_of_identity(const Subdivision& subdivision,
                                        ComplexPtr subdivided, ComplexPtr base,
                                        VertexRule rule) {
  if (*subdivided != subdivision.complex) {
    throw std::invalid_argument(
        "subdivision table does not belong to the given subdivided complex");
  }
  if (subdivision.barycenter_of.size() != subdivided->vertices().size()) {
    throw std::invalid_argument("barycenter table is missing or incomplete");
  }
  // The table must really describe Sd(base); rebuilding is cheap and rules
  // out tables that merely look plausible.
  const Subdivision rebuilt = barycentric_subdivision(*base);
  if (rebuilt.complex != subdivision.complex ||
      rebuilt.barycenter_of != subdivision.barycenter_of) {
    throw std::invalid_argument(
        "the subdivision was not produced from the given base complex");
  }
  std::vector<VertexId> values;
  values.reserve(subdivision.barycenter_of.size());
  for (const Simplex& face : subdivision.barycenter_of) {
    values.push_back(rule == VertexRule::kMinLabel ? face.front()
                                                   : face.back());
  }
  return SimplicialMap(std::move(subdivided), std::move(base),
                       std::move(values));
}

}  // namespace contig
