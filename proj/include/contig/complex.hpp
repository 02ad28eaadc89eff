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

#ifndef CONTIG_COMPLEX_HPP_
#define CONTIG_COMPLEX_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace contig {

// Vertex labels are non-negative integers. The integer order doubles as the
// linear order used for ordered products.
using VertexId = int;

// A simplex is a strictly increasing list of vertex labels.
using Simplex = std::vector<VertexId>;

/// Sorts and deduplicates `vertices` into a valid Simplex.
/// Throws std::invalid_argument if empty or containing negative labels.
Simplex normalize_simplex(Simplex vertices);

/// A finite abstract simplicial complex, stored as its facet list.
///
/// Facets are kept sorted lexicographically, duplicate-free and mutually
/// non-contained. The vertex set is derived as the union of the facets; it
/// need not be dense (subcomplexes keep the labels of their parent complex).
/// Instances are immutable after construction and safe to share across
/// threads.
class Complex {
 public:
  /// Builds a complex from arbitrary facet candidates. Each candidate is
  /// normalized, duplicates are dropped, and candidates contained in another
  /// candidate are pruned. Throws std::invalid_argument on empty input.
  static Complex from_facets(std::vector<Simplex> facet_candidates);

  const std::vector<Simplex>& facets() const { return facets_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  /// Largest facet size minus one.
  int dimension() const;

  /// True when the vertex labels are exactly 0..vertex_count-1.
  bool is_dense() const;

  /// Position of `v` in the sorted vertex list, or -1 if absent.
  int vertex_index(VertexId v) const;

  /// Indices into facets() of the facets containing `v`. Empty if absent.
  std::span<const int> facets_containing(VertexId v) const;

  /// True iff `s` (assumed normalized) is contained in some facet.
  /// Unknown labels make this false, never an error.
  bool is_simplex(const Simplex& s) const;

  bool operator==(const Complex& other) const {
    return facets_ == other.facets_;
  }
  bool operator!=(const Complex& other) const { return !(*this == other); }

 private:
  Complex() = default;

  std::vector<Simplex> facets_;
  std::vector<VertexId> vertices_;
  // CSR layout of the vertex -> facet-index adjacency, aligned with vertices_.
  std::vector<int> star_offsets_;
  std::vector<int> star_data_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

inline ComplexPtr make_complex(Complex c) {
  return std::make_shared<const Complex>(std::move(c));
}

/// Constructs a complex whose vertex labels must come out dense: every label
/// in 0..max must appear in some facet. Throws std::invalid_argument with a
/// diagnostic naming the first missing label otherwise. Non-maximal input
/// faces are pruned silently.
Complex build_complex(const std::vector<std::vector<int>>& facet_lists);

/// Encoding of product vertices (i, j) as right_count * i + j.
struct ProductVertexCodec {
  int left_vertex_count = 0;
  int right_vertex_count = 0;

  VertexId encode(VertexId left, VertexId right) const {
    return right_vertex_count * left + right;
  }
  VertexId left_of(VertexId encoded) const {
    return encoded / right_vertex_count;
  }
  VertexId right_of(VertexId encoded) const {
    return encoded % right_vertex_count;
  }

  bool operator==(const ProductVertexCodec&) const = default;
};

inline ProductVertexCodec product_codec(const Complex& left,
                                        const Complex& right) {
  return ProductVertexCodec{left.vertex_count(), right.vertex_count()};
}

/// Ordered (staircase) product of two complexes with dense vertex labels.
/// Vertices are pairs encoded by product_codec(left, right); facets are the
/// maximal monotone chains over pairs of facets. The realization is
/// homeomorphic to the product of the realizations.
Complex ordered_product(const Complex& left, const Complex& right);

/// Barycentric subdivision together with the barycenter -> simplex table
/// needed to build approximations of the identity.
struct Subdivision {
  Complex complex;
  // barycenter_of[v] is the simplex of the base complex whose barycenter got
  // label v. Base vertices {w} come first, so v == w for dense bases.
  std::vector<Simplex> barycenter_of;
};

Subdivision barycentric_subdivision(const Complex& base);

/// Subcomplex generated by a subset of facets; vertex labels are preserved.
/// Throws std::invalid_argument if the subset is empty or contains a
/// non-facet.
Complex generated_subcomplex(const Complex& parent,
                             const std::vector<Simplex>& facet_subset);

/// Every simplex of the complex (downward closure of the facets), ordered by
/// dimension then lexicographically.
std::vector<Simplex> all_simplices(const Complex& complex);

/// Alternating face count over the full face poset.
long long euler_characteristic(const Complex& complex);

/// Symmetric table of graph distances on the 1-skeleton.
class DistanceTable {
 public:
  DistanceTable(std::vector<VertexId> vertices, std::vector<int> distances);

  int operator()(VertexId u, VertexId v) const;
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

 private:
  std::vector<VertexId> vertices_;
  std::vector<int> distances_;  // row-major, indexed by vertex position
};

/// Breadth-first distances between all vertex pairs. Throws
/// std::invalid_argument when the 1-skeleton is disconnected (the estimators
/// assume connected codomains).
DistanceTable all_pairs_skeleton_distances(const Complex& complex);

/// True iff the 1-skeleton is connected (single vertices count as connected).
bool is_connected(const Complex& complex);

/// Renders a simplex as "{v0,v1,...}" for diagnostics.
std::string simplex_to_string(const Simplex& s);

}  // namespace contig

#endif  // CONTIG_COMPLEX_HPP_
