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

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "contig/io.hpp"
#include "fixtures.hpp"

using namespace contig;
using nlohmann::json;

TEST_CASE("complex json round trip") {
  const ComplexFile file{*fixtures::circle(), {}, {}};
  const json j = complex_to_json(file);
  CHECK(j["vertex_count"] == 3);
  const ComplexFile back = complex_from_json(j);
  CHECK(back.complex == file.complex);

  SUBCASE("wrong vertex_count is rejected") {
    json bad = j;
    bad["vertex_count"] = 5;
    CHECK_THROWS_AS(complex_from_json(bad), std::invalid_argument);
  }

  SUBCASE("product metadata survives") {
    const auto fixture = fixtures::circle_square();
    const ComplexFile product{*fixture.square, 3,
                              std::vector<std::string>{"circle.json",
                                                       "circle.json"}};
    const ComplexFile back_product = complex_from_json(
        complex_to_json(product));
    CHECK(back_product.codec == 3);
    CHECK(back_product.complex == *fixture.square);
  }
}

TEST_CASE("chain json round trip keeps verification intact") {
  const auto fixture = fixtures::circle_square();
  const ContiguityChain chain = fixtures::circle_j0_chain(fixture);
  const ContiguityChain back = chain_from_json(chain_to_json(chain));
  REQUIRE(back.maps.size() == chain.maps.size());
  const ComplexPtr sub = back.maps.front().domain();
  CHECK(verify_chain(back, fixture.projection_first.restrict_to(sub),
                     fixture.projection_second.restrict_to(sub))
            .ok);
}

TEST_CASE("cover json round trip and named map specs") {
  const auto fixture = fixtures::circle_square();
  const CoverCertificate cover = fixtures::circle_cover(fixture);
  const json j = cover_to_json(cover, "pi1", "pi2", 3);
  const CoverCertificate back = cover_from_json(j);
  CHECK(verify_cover(back).ok);
  CHECK(back.parts.size() == 2);
  CHECK(back.psi.values() == cover.psi.values());

  SUBCASE("explicit assignment arrays work too") {
    const CoverCertificate raw = cover_from_json(cover_to_json(cover));
    CHECK(verify_cover(raw).ok);
  }

  SUBCASE("the same file opens as a planner system") {
    const PlannerSystem system = planner_system_from_json(j);
    CHECK(system.certificate().parts.size() == 2);
  }

  SUBCASE("a tampered assignment no longer verifies") {
    json bad = j;
    bad["parts"][0]["maps"][3][1] = 2;
    CHECK_FALSE(verify_cover(cover_from_json(bad)).ok);
  }

  SUBCASE("missing fields are flagged") {
    json bad = j;
    bad.erase("psi");
    CHECK_THROWS_AS(cover_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("map specs resolve identifiers") {
  const auto fixture = fixtures::circle_square();
  const SimplicialMap pi1 = map_from_spec(json("pi1"), fixture.square,
                                          fixture.base, 3, {});
  CHECK(pi1.values() == fixture.projection_first.values());

  const SimplicialMap c2 = map_from_spec(json("constant:2"), fixture.square,
                                         fixture.base, 3, {});
  CHECK(c2.values() == std::vector<VertexId>(9, 2));

  const SimplicialMap i1 = map_from_spec(json("iota1:0"), fixture.base,
                                         fixture.square, {}, 3);
  CHECK(i1.apply(2) == 6);

  CHECK_THROWS_AS(
      map_from_spec(json("pi1"), fixture.square, fixture.base, {}, {}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      map_from_spec(json("sideways"), fixture.square, fixture.base, 3, {}),
      std::invalid_argument);
}

TEST_CASE("tsv export lays out maps by rows and vertices by columns") {
  const auto fixture = fixtures::circle_square();
  const std::string tsv = chain_to_tsv(fixtures::circle_j0_chain(fixture));
  std::istringstream lines(tsv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "\t0\t1\t2\t3\t4\t5\t6\t7\t8");
  std::string row;
  std::getline(lines, row);
  CHECK(row == "phi_0\t0\t0\t0\t1\t1\t1\t2\t2\t2");
  int rows = 1;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == 7);

  SUBCASE("sparse domains list only their vertices") {
    const std::string sparse =
        chain_to_tsv(fixtures::circle_j1_chain(fixture));
    std::istringstream in(sparse);
    std::string first;
    std::getline(in, first);
    CHECK(first == "\t0\t1\t2\t3\t4\t5\t7\t8");
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(rational_from_string("1/2") == Rational{1, 2});
  CHECK(rational_from_string("3") == Rational{3});
  CHECK(rational_from_string("0.25") == Rational{1, 4});
  CHECK(rational_to_string(Rational{1, 2}) == "1/2");
  CHECK(rational_to_string(Rational{2}) == "2");
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("waypoints serialize with exact weights") {
  const auto fixture = fixtures::circle_square();
  const PlannerSystem system(fixture.base, fixture.square, fixture.codec,
                             fixtures::circle_cover(fixture));
  const BarycentricPoint a{{0, 1}, {Rational{1, 2}, Rational{1, 2}}};
  const auto path = plan_path(system, a, BarycentricPoint::at_vertex(0));
  const json j = waypoints_to_json(path);
  REQUIRE(j.is_array());
  CHECK(j.size() == path.size());
  CHECK(j[0]["weights_exact"][0] == "1/2");
}
