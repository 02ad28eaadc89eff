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

#include "fixtures.hpp"

#include <algorithm>

namespace contig::fixtures {

namespace {

ContiguityChain chain_from_rows(const SquareFixture& fixture,
                                const std::vector<Simplex>& part,
                                std::vector<std::vector<VertexId>> rows) {
  ComplexPtr sub =
      make_complex(generated_subcomplex(*fixture.square, part));
  ContiguityChain chain;
  chain.maps.reserve(rows.size());
  for (auto& row : rows) {
    chain.maps.emplace_back(sub, fixture.base, std::move(row));
  }
  return chain;
}

CoverCertificate cover_from(const SquareFixture& fixture,
                            std::vector<CoverPart> parts) {
  return CoverCertificate{fixture.square, fixture.projection_first,
                          fixture.projection_second, std::move(parts)};
}

SquareFixture square_of(ComplexPtr base) {
  ComplexPtr square = make_complex(ordered_product(*base, *base));
  const ProductVertexCodec codec = product_codec(*base, *base);
  auto [first, second] = projections(square, base, base, codec);
  return SquareFixture{std::move(base), std::move(square), codec,
                       std::move(first), std::move(second)};
}

}  // namespace

ComplexPtr circle() {
  return make_complex(build_complex({{0, 1}, {0, 2}, {1, 2}}));
}

ComplexPtr wedge() {
  return make_complex(build_complex({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

SquareFixture circle_square() { return square_of(circle()); }
SquareFixture wedge_square() { return square_of(wedge()); }

// Vertices of the circle's square are encoded 3i+j. The first domain touches
// all nine vertices; the second misses (2,0) = 6.
std::vector<Simplex> circle_j0_facets() {
  return {{0, 1, 4}, {0, 1, 7}, {0, 6, 7}, {0, 6, 8}, {1, 2, 5},
          {1, 4, 5}, {3, 5, 8}, {3, 6, 7}, {3, 6, 8}, {4, 5, 8}};
}

std::vector<Simplex> circle_j1_facets() {
  return {{0, 2, 5}, {0, 2, 8}, {0, 3, 4}, {0, 3, 5},
          {1, 2, 8}, {1, 7, 8}, {3, 4, 7}, {4, 7, 8}};
}

ContiguityChain circle_j0_chain(const SquareFixture& fixture) {
  // Columns: vertices 0..8, i.e. (0,0),(0,1),(0,2),(1,0),...,(2,2).
  return chain_from_rows(fixture, circle_j0_facets(),
                         {
                             {0, 0, 0, 1, 1, 1, 2, 2, 2},
                             {0, 0, 0, 2, 1, 1, 2, 2, 2},
                             {0, 0, 0, 2, 1, 1, 0, 0, 2},
                             {0, 1, 1, 2, 1, 1, 0, 0, 2},
                             {0, 1, 2, 2, 1, 2, 0, 0, 2},
                             {0, 1, 2, 0, 1, 2, 0, 0, 2},
                             {0, 1, 2, 0, 1, 2, 0, 1, 2},
                         });
}

ContiguityChain circle_j1_chain(const SquareFixture& fixture) {
  // Columns: vertices 0,1,2,3,4,5,7,8 (no (2,0)).
  return chain_from_rows(fixture, circle_j1_facets(),
                         {
                             {0, 0, 0, 1, 1, 1, 2, 2},
                             {0, 2, 0, 1, 1, 1, 2, 2},
                             {0, 2, 0, 1, 1, 1, 1, 2},
                             {0, 2, 0, 0, 1, 1, 1, 2},
                             {0, 2, 0, 0, 1, 0, 1, 2},
                             {0, 2, 2, 0, 1, 0, 1, 2},
                             {0, 1, 2, 0, 1, 0, 1, 2},
                             {0, 2, 2, 0, 1, 0, 1, 2},
                             {0, 1, 2, 0, 1, 0, 1, 2},
                             {0, 1, 2, 0, 1, 2, 1, 2},
                         });
}

// Vertices of the wedge's square are encoded 4i+j.
std::vector<Simplex> wedge_j0_facets() {
  return {{5, 9, 10},  {0, 3, 15}, {0, 4, 7},   {4, 8, 11}, {0, 4, 6},
          {5, 13, 15}, {0, 3, 7},  {0, 2, 10},  {0, 2, 6},  {0, 4, 5},
          {0, 12, 14}, {1, 13, 15}, {0, 12, 15}, {4, 5, 9},  {4, 8, 9},
          {4, 5, 13},  {4, 7, 11}, {1, 3, 15},  {0, 2, 14}, {1, 3, 7}};
}

std::vector<Simplex> wedge_j1_facets() {
  return {{4, 7, 15},  {0, 1, 9},  {1, 2, 6},  {0, 1, 13}, {4, 12, 13},
          {5, 7, 15},  {1, 9, 10}, {1, 13, 14}, {0, 1, 5},  {1, 5, 7},
          {4, 12, 15}, {0, 8, 9},  {1, 5, 6},  {0, 3, 11}, {0, 12, 13},
          {0, 8, 11},  {1, 2, 10}, {1, 2, 14}};
}

std::vector<Simplex> wedge_j2_facets() {
  return {{4, 12, 14}, {0, 8, 10}, {1, 9, 11}, {1, 3, 11},
          {5, 13, 14}, {4, 6, 10}, {4, 6, 14}, {5, 6, 10},
          {5, 6, 14},  {4, 8, 10}, {5, 7, 11}, {5, 9, 11}};
}

ContiguityChain wedge_j0_chain(const SquareFixture& fixture) {
  // Columns: vertices 0..15.
  return chain_from_rows(
      fixture, wedge_j0_facets(),
      {
          {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3},
          {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 0, 3, 0, 3},
          {0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 2, 1, 0, 3, 2, 3},
          {0, 0, 2, 0, 1, 1, 0, 0, 0, 1, 2, 1, 0, 3, 0, 3},
          {0, 3, 2, 3, 1, 1, 0, 0, 0, 1, 2, 0, 0, 3, 2, 3},
          {0, 3, 2, 3, 1, 1, 0, 0, 0, 1, 2, 0, 0, 1, 2, 3},
          {0, 3, 2, 3, 0, 1, 0, 0, 0, 1, 2, 0, 0, 1, 2, 3},
          {0, 3, 2, 3, 0, 1, 0, 3, 0, 1, 2, 0, 0, 1, 2, 3},
          {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3},
      });
}

ContiguityChain wedge_j1_chain(const SquareFixture& fixture) {
  // Columns: vertices 0..15.
  return chain_from_rows(
      fixture, wedge_j1_facets(),
      {
          {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3},
          {0, 0, 0, 0, 1, 1, 1, 1, 0, 2, 2, 0, 3, 3, 3, 3},
          {0, 0, 0, 1, 3, 1, 0, 1, 0, 2, 2, 1, 3, 3, 3, 3},
          {0, 0, 0, 0, 3, 1, 0, 1, 0, 2, 2, 1, 0, 0, 0, 3},
          {0, 0, 2, 0, 3, 1, 0, 1, 0, 0, 0, 0, 0, 0, 2, 3},
          {0, 0, 0, 3, 3, 1, 0, 1, 0, 0, 0, 3, 0, 0, 0, 3},
          {0, 1, 0, 3, 3, 1, 0, 1, 0, 1, 0, 3, 0, 0, 0, 3},
          {0, 1, 0, 3, 3, 1, 0, 3, 0, 1, 0, 3, 0, 0, 0, 3},
          {0, 1, 0, 3, 0, 1, 0, 3, 0, 1, 1, 3, 0, 0, 0, 3},
          {0, 1, 1, 3, 0, 1, 0, 3, 0, 1, 1, 3, 0, 1, 1, 3},
          {0, 1, 1, 3, 0, 1, 1, 3, 0, 1, 2, 3, 0, 1, 2, 3},
          {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3},
      });
}

ContiguityChain wedge_j2_chain(const SquareFixture& fixture) {
  // Columns: vertices 0,1,3,4,5,6,7,8,9,10,11,12,13,14 (no 2 or 15).
  return chain_from_rows(
      fixture, wedge_j2_facets(),
      {
          {0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3},
          {0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 1, 1},
          {2, 0, 0, 1, 1, 2, 1, 2, 2, 2, 2, 3, 1, 1},
          {1, 2, 0, 1, 1, 2, 1, 2, 2, 2, 2, 1, 1, 1},
          {1, 2, 2, 1, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2},
          {1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 1, 2, 1, 2},
          {1, 1, 1, 1, 1, 2, 3, 1, 1, 2, 1, 2, 1, 1},
          {2, 3, 3, 2, 1, 2, 3, 2, 1, 2, 3, 1, 1, 2},
          {0, 1, 3, 2, 1, 1, 3, 0, 1, 2, 3, 2, 1, 2},
          {0, 1, 3, 2, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2},
          {0, 1, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2},
      });
}

CoverCertificate circle_cover(const SquareFixture& fixture) {
  std::vector<CoverPart> parts;
  parts.push_back(CoverPart{circle_j0_facets(), circle_j0_chain(fixture)});
  parts.push_back(CoverPart{circle_j1_facets(), circle_j1_chain(fixture)});
  return cover_from(fixture, std::move(parts));
}

CoverCertificate wedge_cover(const SquareFixture& fixture) {
  auto sorted = [](std::vector<Simplex> facets) {
    std::sort(facets.begin(), facets.end());
    return facets;
  };
  std::vector<CoverPart> parts;
  parts.push_back(
      CoverPart{sorted(wedge_j0_facets()), wedge_j0_chain(fixture)});
  parts.push_back(
      CoverPart{sorted(wedge_j1_facets()), wedge_j1_chain(fixture)});
  parts.push_back(
      CoverPart{sorted(wedge_j2_facets()), wedge_j2_chain(fixture)});
  return cover_from(fixture, std::move(parts));
}

}  // namespace contig::fixtures
