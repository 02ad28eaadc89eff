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

#include <algorithm>
#include <set>

#include "contig/covering.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace contig;

namespace {

SearchParams quick_params(std::uint64_t seed) {
  SearchParams params;
  params.max_iterations = 1000;
  params.accept_probability = 0.1;
  params.optimize_rounds = 200;
  params.target_parts = 2;
  params.seed = seed;
  return params;
}

}  // namespace

TEST_CASE("single facet states always carry a verified chain") {
  const auto fixture = fixtures::circle_square();
  const DistanceTable dist = all_pairs_skeleton_distances(*fixture.base);
  for (const Simplex& facet : fixture.square->facets()) {
    const GrowState state = single_facet_state(
        fixture.projection_first, fixture.projection_second, facet, dist);
    CHECK(state.part == std::vector<Simplex>{facet});
    CHECK(verify_chain(state.chain,
                       fixture.projection_first.restrict_to(state.subcomplex),
                       fixture.projection_second.restrict_to(state.subcomplex))
              .ok);
  }
}

TEST_CASE("add_facet grows by one facet or not at all") {
  const auto fixture = fixtures::circle_square();
  const DistanceTable dist = all_pairs_skeleton_distances(*fixture.base);
  const SearchParams params = quick_params(21);

  SUBCASE("nothing to add when the state covers everything") {
    // equal maps make the whole square one contiguity subcomplex
    const SimplicialMap psi = fixture.projection_first;
    Rng rng(params.seed);
    GrowState all{fixture.square->facets(), fixture.square,
                  ContiguityChain{{psi, psi}}};
    const GrowState unchanged =
        add_facet(all, psi, psi, params, rng, dist);
    CHECK(unchanged.part.size() == all.part.size());
  }

  SUBCASE("growth from one facet of the torus succeeds") {
    Rng rng(params.seed);
    const GrowState seed_state =
        single_facet_state(fixture.projection_first,
                           fixture.projection_second,
                           fixtures::circle_j0_facets().front(), dist);
    const GrowState grown =
        add_facet(seed_state, fixture.projection_first,
                  fixture.projection_second, params, rng, dist);
    CHECK(grown.part.size() == 2);
    CHECK(verify_chain(grown.chain,
                       fixture.projection_first.restrict_to(grown.subcomplex),
                       fixture.projection_second.restrict_to(grown.subcomplex))
              .ok);
  }

  SUBCASE("equal source maps accept the first facet scanned") {
    const SimplicialMap psi = fixture.projection_first;
    Rng rng(params.seed);
    const GrowState seed_state = single_facet_state(
        psi, psi, fixture.square->facets().front(), dist);
    const GrowState grown = add_facet(seed_state, psi, psi, params, rng, dist);
    CHECK(grown.part.size() == 2);
  }
}

TEST_CASE("rcc produces verified contiguity subcomplexes") {
  const auto fixture = fixtures::circle_square();
  const DistanceTable dist = all_pairs_skeleton_distances(*fixture.base);
  const SearchParams params = quick_params(5);

  SUBCASE("a one-facet domain returns that facet") {
    const ComplexPtr single = make_complex(
        generated_subcomplex(*fixture.square, {fixture.square->facets()[4]}));
    Rng rng(9);
    const GrowState state =
        rcc(fixture.projection_first.restrict_to(single),
            fixture.projection_second.restrict_to(single), params, rng, dist);
    CHECK(state.part == std::vector<Simplex>{fixture.square->facets()[4]});
  }

  SUBCASE("constant maps to adjacent vertices absorb every facet") {
    const SimplicialMap zero =
        constant_map(fixture.square, fixture.base, 0);
    const SimplicialMap one = constant_map(fixture.square, fixture.base, 1);
    Rng rng(11);
    const GrowState state = rcc(zero, one, params, rng, dist);
    CHECK(state.part.size() == fixture.square->facets().size());
  }

  SUBCASE("the projections never admit the full torus") {
    // If all 18 triangles formed a contiguity subcomplex, composing with the
    // first axial inclusion would put the identity and a constant in the
    // same class on the circle, which the exhaustive walk refutes.
    REQUIRE_FALSE(oracles::same_contiguity_class(
        *fixtures::circle(), *fixtures::circle(), {0, 1, 2}, {0, 0, 0}));
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      Rng rng(seed);
      const GrowState state =
          rcc(fixture.projection_first, fixture.projection_second,
              quick_params(seed), rng, dist);
      CHECK(state.part.size() < 18);
      CHECK(verify_chain(
                state.chain,
                fixture.projection_first.restrict_to(state.subcomplex),
                fixture.projection_second.restrict_to(state.subcomplex))
                .ok);
    }
  }
}

TEST_CASE("the reference circle domain J0 is maximal") {
  // No further triangle can be added to J0: for each of the eight remaining
  // facets, the restrictions of the projections fall into different
  // contiguity classes of the enlarged subcomplex (exhaustive walk).
  const auto fixture = fixtures::circle_square();
  const std::vector<Simplex> j0 = fixtures::circle_j0_facets();
  for (const Simplex& extra : fixture.square->facets()) {
    if (std::find(j0.begin(), j0.end(), extra) != j0.end()) continue;
    std::vector<Simplex> grown = j0;
    grown.push_back(extra);
    const Complex sub = generated_subcomplex(*fixture.square, grown);
    oracles::MapValues first, second;
    for (VertexId v : sub.vertices()) {
      first.push_back(fixture.projection_first.apply(v));
      second.push_back(fixture.projection_second.apply(v));
    }
    CHECK_FALSE(
        oracles::same_contiguity_class(sub, *fixture.base, first, second));
  }

  SUBCASE("add_facets returns J0 unchanged") {
    const DistanceTable dist = all_pairs_skeleton_distances(*fixture.base);
    const ComplexPtr sub =
        make_complex(generated_subcomplex(*fixture.square, j0));
    GrowState start{j0, sub, fixtures::circle_j0_chain(fixture)};
    SearchParams params = quick_params(31);
    params.max_iterations = 2000;
    Rng rng(params.seed);
    const GrowState result =
        add_facets(start, fixture.projection_first, fixture.projection_second,
                   params, rng, dist);
    CHECK(result.part == j0);
  }

  SUBCASE("add_facets rejects invalid start states") {
    const DistanceTable dist = all_pairs_skeleton_distances(*fixture.base);
    const ComplexPtr sub =
        make_complex(generated_subcomplex(*fixture.square, j0));
    // chain that does not end at the second projection
    GrowState bad{j0, sub,
                  ContiguityChain{
                      {fixture.projection_first.restrict_to(sub),
                       fixture.projection_first.restrict_to(sub)}}};
    Rng rng(1);
    CHECK_THROWS_AS(
        add_facets(bad, fixture.projection_first, fixture.projection_second,
                   quick_params(1), rng, dist),
        std::invalid_argument);
  }
}

TEST_CASE("add_facets never shrinks an rcc result") {
  const auto fixture = fixtures::circle_square();
  const DistanceTable dist = all_pairs_skeleton_distances(*fixture.base);
  const SearchParams params = quick_params(17);
  Rng rng(17);
  const GrowState state = rcc(fixture.projection_first,
                              fixture.projection_second, params, rng, dist);
  const GrowState more =
      add_facets(state, fixture.projection_first, fixture.projection_second,
                 params, rng, dist);
  CHECK(more.part.size() >= state.part.size());
  for (const Simplex& f : state.part) {
    CHECK(std::find(more.part.begin(), more.part.end(), f) != more.part.end());
  }
}

TEST_CASE("covering partitions the domain and verifies") {
  const auto fixture = fixtures::circle_square();

  SUBCASE("equal maps yield a single part") {
    Rng rng(3);
    const CoverCertificate cover =
        covering(fixture.projection_first, fixture.projection_first,
                 quick_params(3), rng);
    CHECK(cover.parts.size() == 1);
    CHECK(verify_cover(cover).ok);
  }

  SUBCASE("projections need at least two parts, and every run verifies") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      Rng rng(seed);
      const CoverCertificate cover =
          covering(fixture.projection_first, fixture.projection_second,
                   quick_params(seed), rng);
      CHECK(verify_cover(cover).ok);
      CHECK(cover.parts.size() >= 2);
      MESSAGE("covering seed ", seed, ": ", cover.parts.size(), " parts");
    }
  }
}

TEST_CASE("optimized_covering respects its contract") {
  const auto fixture = fixtures::circle_square();

  SUBCASE("zero optimization rounds reproduce covering exactly") {
    SearchParams params = quick_params(13);
    params.optimize_rounds = 0;
    Rng rng_a(13), rng_b(13);
    const CoverCertificate plain =
        covering(fixture.projection_first, fixture.projection_second, params,
                 rng_a);
    const CoverCertificate optimized =
        optimized_covering(fixture.projection_first,
                           fixture.projection_second, params, rng_b);
    REQUIRE(plain.parts.size() == optimized.parts.size());
    for (std::size_t p = 0; p < plain.parts.size(); ++p) {
      CHECK(plain.parts[p].facet_subset == optimized.parts[p].facet_subset);
    }
  }

  SUBCASE("part counts never increase and every run verifies") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SearchParams params = quick_params(seed);
      Rng rng(seed);
      RunReport report;
      const CoverCertificate cover = optimized_covering(
          fixture.projection_first, fixture.projection_second, params, rng,
          std::nullopt, &report);
      CHECK(verify_cover(cover).ok);
      CHECK(cover.parts.size() >= 2);  // the torus never covers in one part
      std::size_t previous = 1u << 20;
      for (const auto& sizes : report.part_sizes_history) {
        CHECK(sizes.size() <= previous);
        previous = sizes.size();
        int total = 0;
        for (int s : sizes) total += s;
        CHECK(total == 18);  // partitions stay exact along the way
      }
    }
  }

  SUBCASE("runs are deterministic in the seed") {
    SearchParams params = quick_params(29);
    Rng rng_a(29), rng_b(29);
    const CoverCertificate one = optimized_covering(
        fixture.projection_first, fixture.projection_second, params, rng_a);
    const CoverCertificate two = optimized_covering(
        fixture.projection_first, fixture.projection_second, params, rng_b);
    REQUIRE(one.parts.size() == two.parts.size());
    for (std::size_t p = 0; p < one.parts.size(); ++p) {
      CHECK(one.parts[p].facet_subset == two.parts[p].facet_subset);
      REQUIRE(one.parts[p].chain.maps.size() ==
              two.parts[p].chain.maps.size());
      for (std::size_t m = 0; m < one.parts[p].chain.maps.size(); ++m) {
        CHECK(one.parts[p].chain.maps[m].values() ==
              two.parts[p].chain.maps[m].values());
      }
    }
  }
}
