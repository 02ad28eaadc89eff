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

#ifndef CONTIG_PLANNER_HPP_
#define CONTIG_PLANNER_HPP_

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "contig/covering.hpp"

namespace contig {

using Rational = boost::rational<long long>;

/// A point of a realized complex in barycentric coordinates: positive
/// rational weights over the vertices of its (open) carrier simplex, summing
/// to one. Rational arithmetic keeps path evaluation exact.
struct BarycentricPoint {
  Simplex carrier;
  std::vector<Rational> weights;

  /// Throws std::invalid_argument unless the carrier is a simplex of
  /// `complex` and the weights are positive and sum to one.
  void validate(const Complex& complex) const;

  static BarycentricPoint at_vertex(VertexId v);
};

/// Upper-bound estimate plus everything needed to audit and reuse it.
struct DistanceReport {
  int bound = 0;
  CoverCertificate certificate;
  SearchParams params;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  RunReport run;
};

/// Iterated barycentric subdivisions of a base complex together with the
/// approximation of identity connecting each level to the previous one.
struct SubdivisionTower {
  std::vector<ComplexPtr> levels;        // levels[0] is the base
  std::vector<SimplicialMap> to_previous;  // to_previous[k]: level k+1 -> k

  int depth() const { return static_cast<int>(levels.size()) - 1; }

  /// Composite approximation levels.back() -> levels.front(); the identity
  /// map at depth zero.
  SimplicialMap to_base() const;
};

/// Builds the tower, refusing once a level would exceed `max_facets`
/// (iterated subdivision grows factorially).
SubdivisionTower build_tower(ComplexPtr base, int depth,
                             std::int64_t max_facets = 1'000'000);

/// Upper bound for the contiguity distance between two simplicial maps:
/// parts of an optimized covering, minus one. The certificate always
/// accompanies the bound.
DistanceReport estimate_distance(const SimplicialMap& phi,
                                 const SimplicialMap& phi_prime,
                                 const SearchParams& params,
                                 const Deadline& deadline = std::nullopt);

/// Simplicial complexity: distance between the two projections of the
/// ordered square. Throws on disconnected input.
DistanceReport estimate_sc(ComplexPtr complex, const SearchParams& params,
                           const Deadline& deadline = std::nullopt);

/// LS-category: distance between the axial inclusions into the ordered
/// square, with `base` as the axis point.
DistanceReport estimate_cat(ComplexPtr complex, VertexId base,
                            const SearchParams& params,
                            const Deadline& deadline = std::nullopt);

/// Distance after precomposing both maps with `depth` iterated
/// approximations of identity on a subdivided domain.
DistanceReport estimate_distance_subdivided(
    const SimplicialMap& phi, const SimplicialMap& phi_prime, int depth,
    const SearchParams& params, const Deadline& deadline = std::nullopt,
    std::int64_t max_facets = 1'000'000);

/// A verified system of piecewise linear motion planners on a base complex.
class PlannerSystem {
 public:
  /// Checks that the certificate verifies, covers the ordered square of
  /// `base`, and connects the two projections. Throws std::invalid_argument
  /// otherwise.
  PlannerSystem(ComplexPtr base, ComplexPtr square, ProductVertexCodec codec,
                CoverCertificate certificate);

  const ComplexPtr& base() const { return base_; }
  const ComplexPtr& square() const { return square_; }
  const ProductVertexCodec& codec() const { return codec_; }
  const CoverCertificate& certificate() const { return certificate_; }

 private:
  ComplexPtr base_;
  ComplexPtr square_;
  ProductVertexCodec codec_;
  CoverCertificate certificate_;
};

/// Carrier of the product point (a, b) inside the staircase triangulation of
/// carrier(a) x carrier(b), plus its barycentric weights. The merged weight
/// cuts determine the staircase; on cut ties the lexicographically smallest
/// chain is chosen and zero-length segments are pruned so the carrier stays
/// open.
BarycentricPoint product_point(const PlannerSystem& system,
                               const BarycentricPoint& a,
                               const BarycentricPoint& b);

/// Index of the first certificate part whose subcomplex contains `carrier`.
/// Facets always belong to exactly one part; faces shared between parts go to
/// the lowest index. Throws std::invalid_argument for foreign simplices.
int locate_in_part(const PlannerSystem& system, const Simplex& carrier);

/// Evaluates the local planner on the pair (a, b): the returned polyline is
/// a, then the pushforward of the product point under every chain map of the
/// selected part, then b. Pushing forward sums the weights of vertices with
/// equal image, so every waypoint's weights still sum to one exactly.
/// `part_hint` forces a part; if that part does not cover the product point
/// the error lists the parts that do.
std::vector<BarycentricPoint> plan_path(const PlannerSystem& system,
                                        const BarycentricPoint& a,
                                        const BarycentricPoint& b,
                                        std::optional<int> part_hint = std::nullopt);

}  // namespace contig

#endif  // CONTIG_PLANNER_HPP_
