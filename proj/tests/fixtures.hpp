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

#ifndef CONTIG_TESTS_FIXTURES_HPP_
#define CONTIG_TESTS_FIXTURES_HPP_

#include "contig/planner.hpp"
#include "contig/verify.hpp"

// Reference inputs and certificates used across the test suites: the minimal
// circle triangulation and a wedge of two circles, together with hand-checked
// two- and three-domain planner systems on their ordered squares.

namespace contig::fixtures {

// Minimal triangulation of the circle: three vertices, three edges.
ComplexPtr circle();

// Four vertices, five edges; realizes a wedge of two circles.
ComplexPtr wedge();

struct SquareFixture {
  ComplexPtr base;
  ComplexPtr square;
  ProductVertexCodec codec;
  SimplicialMap projection_first;
  SimplicialMap projection_second;
};

SquareFixture circle_square();
SquareFixture wedge_square();

// The two local domains of the reference cover of the circle's ordered
// square (10 and 8 triangles; the second domain misses vertex (2,0)).
std::vector<Simplex> circle_j0_facets();
std::vector<Simplex> circle_j1_facets();

// The three local domains of the reference cover of the wedge's ordered
// square (20, 18 and 12 triangles).
std::vector<Simplex> wedge_j0_facets();
std::vector<Simplex> wedge_j1_facets();
std::vector<Simplex> wedge_j2_facets();

// Reference chains between the restricted projections on each local domain.
// Row k of the table is the assignment of the k-th chain map over the sorted
// vertex list of the domain.
ContiguityChain circle_j0_chain(const SquareFixture& fixture);
ContiguityChain circle_j1_chain(const SquareFixture& fixture);
ContiguityChain wedge_j0_chain(const SquareFixture& fixture);
ContiguityChain wedge_j1_chain(const SquareFixture& fixture);
ContiguityChain wedge_j2_chain(const SquareFixture& fixture);

// Full certificates for (pi1, pi2): {J0, J1} on the circle, {J0, J1, J2} on
// the wedge.
CoverCertificate circle_cover(const SquareFixture& fixture);
CoverCertificate wedge_cover(const SquareFixture& fixture);

}  // namespace contig::fixtures

#endif  // CONTIG_TESTS_FIXTURES_HPP_
