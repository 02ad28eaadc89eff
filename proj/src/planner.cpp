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

#include "contig/planner.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace contig {

void BarycentricPoint::validate(const Complex& complex) const {
  if (!complex.is_simplex(carrier)) {
    throw std::invalid_argument("carrier " + simplex_to_string(carrier) +
                                " is not a simplex of the complex");
  }
  if (weights.size() != carrier.size()) {
    throw std::invalid_argument("expected one weight per carrier vertex");
  }
  Rational total{0};
  for (const Rational& w : weights) {
    if (w <= Rational{0}) {
      throw std::invalid_argument(
          "barycentric weights must be positive (the carrier is open)");
    }
    total += w;
  }
  if (total != Rational{1}) {
    throw std::invalid_argument("barycentric weights must sum to one");
  }
}

BarycentricPoint BarycentricPoint::at_vertex(VertexId v) {
  return BarycentricPoint{{v}, {Rational{1}}};
}

SimplicialMap SubdivisionTower::to_base() const {
  if (to_previous.empty()) return identity_map(levels.front());
  SimplicialMap composite = to_previous.back();
  for (std::size_t k = to_previous.size() - 1; k > 0; --k) {
    composite = compose(to_previous[k - 1], composite);
  }
  return composite;
}

SubdivisionTower build_tower(ComplexPtr base, int depth,
                             std::int64_t max_facets) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  SubdivisionTower tower;
  tower.levels.push_back(std::move(base));
  for (int k = 1; k <= depth; ++k) {
    const Complex& previous = *tower.levels.back();
    std::int64_t predicted = 0;
    for (const Simplex& f : previous.facets()) {
      std::int64_t flags = 1;
      for (std::size_t i = 2; i <= f.size(); ++i) {
        flags *= static_cast<std::int64_t>(i);
      }
      predicted += flags;
      if (predicted > max_facets) {
        throw std::invalid_argument(
            "refusing to subdivide: level " + std::to_string(k) +
            " would exceed " + std::to_string(max_facets) +
            " facets; raise the limit (CONTIG_MAX_FACETS) to force it");
      }
    }
    Subdivision subdivision = barycentric_subdivision(previous);
    ComplexPtr level = make_complex(std::move(subdivision.complex));
    subdivision.complex = *level;  // keep the table aligned with the pointer
    tower.to_previous.push_back(approximation_of_identity(
        subdivision, level, tower.levels.back()));
    tower.levels.push_back(std::move(level));
  }
  return tower;
}

namespace {

DistanceReport report_from(const SimplicialMap& phi,
                           const SimplicialMap& phi_prime,
                           const SearchParams& params,
                           const Deadline& deadline) {
  const auto started = std::chrono::steady_clock::now();
  Rng rng(params.seed);
  RunReport run;
  CoverCertificate certificate =
      optimized_covering(phi, phi_prime, params, rng, deadline, &run);
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  const int bound = certificate.bound();
  return DistanceReport{bound,       std::move(certificate), params,
                        params.seed, elapsed,                std::move(run)};
}

}  // namespace

DistanceReport estimate_distance(const SimplicialMap& phi,
                                 const SimplicialMap& phi_prime,
                                 const SearchParams& params,
                                 const Deadline& deadline) {
  return report_from(phi, phi_prime, params, deadline);
}

DistanceReport estimate_sc(ComplexPtr complex, const SearchParams& params,
                           const Deadline& deadline) {
  if (!is_connected(*complex)) {
    throw std::invalid_argument("simplicial complexity needs a connected "
                                "complex");
  }
  ComplexPtr square = make_complex(ordered_product(*complex, *complex));
  auto [first, second] = projections(square, complex, complex,
                                     product_codec(*complex, *complex));
  return report_from(first, second, params, deadline);
}

DistanceReport estimate_cat(ComplexPtr complex, VertexId base,
                            const SearchParams& params,
                            const Deadline& deadline) {
  if (!is_connected(*complex)) {
    throw std::invalid_argument("category estimation needs a connected "
                                "complex");
  }
  ComplexPtr square = make_complex(ordered_product(*complex, *complex));
  auto [first, second] = axial_inclusions(
      complex, square, product_codec(*complex, *complex), base);
  return report_from(first, second, params, deadline);
}

DistanceReport estimate_distance_subdivided(const SimplicialMap& phi,
                                            const SimplicialMap& phi_prime,
                                            int depth,
                                            const SearchParams& params,
                                            const Deadline& deadline,
                                            std::int64_t max_facets) {
  const SubdivisionTower tower = build_tower(phi.domain(), depth, max_facets);
  const SimplicialMap down = tower.to_base();
  return report_from(compose(phi, down), compose(phi_prime, down), params,
                     deadline);
}

PlannerSystem::PlannerSystem(ComplexPtr base, ComplexPtr square,
                             ProductVertexCodec codec,
                             CoverCertificate certificate)
    : base_(std::move(base)),
      square_(std::move(square)),
      codec_(codec),
      certificate_(std::move(certificate)) {
  if (!base_ || !square_) {
    throw std::invalid_argument("planner system needs both complexes");
  }
  if (codec_ != product_codec(*base_, *base_) ||
      *square_ != ordered_product(*base_, *base_)) {
    throw std::invalid_argument(
        "planner system square is not the ordered square of the base");
  }
  if (!certificate_.domain || *certificate_.domain != *square_) {
    throw std::invalid_argument(
        "planner certificate does not cover the ordered square");
  }
  auto [first, second] = projections(square_, base_, base_, codec_);
  if (certificate_.psi.values() != first.values() ||
      certificate_.psi_prime.values() != second.values()) {
    throw std::invalid_argument(
        "planner certificate must connect the two projections");
  }
  if (VerifyResult r = verify_cover(certificate_); !r) {
    throw std::invalid_argument("planner certificate fails verification: " +
                                r.diagnostic);
  }
}

BarycentricPoint product_point(const PlannerSystem& system,
                               const BarycentricPoint& a,
                               const BarycentricPoint& b) {
  a.validate(*system.base());
  b.validate(*system.base());

  // Cut the unit interval at the partial weight sums of both points; each
  // segment of the merged subdivision is one staircase vertex. Crossing a cut
  // of `a` advances the left coordinate, a cut of `b` the right one. At equal
  // cut values the right coordinate advances first, which selects the
  // lexicographically smallest staircase chain.
  struct Cut {
    Rational at;
    int advances_left;  // 0 = right, 1 = left; doubles as the tiebreak
  };
  std::vector<Cut> cuts;
  Rational acc{0};
  for (std::size_t i = 0; i + 1 < a.weights.size(); ++i) {
    acc += a.weights[i];
    cuts.push_back(Cut{acc, 1});
  }
  acc = Rational{0};
  for (std::size_t j = 0; j + 1 < b.weights.size(); ++j) {
    acc += b.weights[j];
    cuts.push_back(Cut{acc, 0});
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) {
    if (x.at != y.at) return x.at < y.at;
    return x.advances_left < y.advances_left;
  });

  BarycentricPoint point;
  std::size_t i = 0, j = 0;
  Rational previous{0};
  auto emit = [&](const Rational& upto) {
    const Rational weight = upto - previous;
    previous = upto;
    if (weight == Rational{0}) return;  // tie between cuts: skip the vertex
    point.carrier.push_back(system.codec().encode(a.carrier[i], b.carrier[j]));
    point.weights.push_back(weight);
  };
  for (const Cut& cut : cuts) {
    emit(cut.at);
    if (cut.advances_left) {
      ++i;
    } else {
      ++j;
    }
  }
  emit(Rational{1});
  return point;
}

int locate_in_part(const PlannerSystem& system, const Simplex& carrier) {
  const auto& parts = system.certificate().parts;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].chain.maps.front().domain()->is_simplex(carrier)) {
      return static_cast<int>(p);
    }
  }
  throw std::invalid_argument("simplex " + simplex_to_string(carrier) +
                              " is not covered by any local domain (is it a "
                              "simplex of the ordered square?)");
}

namespace {

BarycentricPoint pushforward(const SimplicialMap& map,
                             const BarycentricPoint& point) {
  std::map<VertexId, Rational> mass;
  for (std::size_t k = 0; k < point.carrier.size(); ++k) {
    mass[map.apply(point.carrier[k])] += point.weights[k];
  }
  BarycentricPoint image;
  for (const auto& [vertex, weight] : mass) {
    image.carrier.push_back(vertex);
    image.weights.push_back(weight);
  }
  return image;
}

}  // namespace

std::vector<BarycentricPoint> plan_path(const PlannerSystem& system,
                                        const BarycentricPoint& a,
                                        const BarycentricPoint& b,
                                        std::optional<int> part_hint) {
  const BarycentricPoint pair = product_point(system, a, b);
  int part_index;
  if (part_hint) {
    part_index = *part_hint;
    const auto& parts = system.certificate().parts;
    if (part_index < 0 || part_index >= static_cast<int>(parts.size())) {
      throw std::invalid_argument("no local domain with index " +
                                  std::to_string(part_index));
    }
    if (!parts[static_cast<std::size_t>(part_index)]
             .chain.maps.front()
             .domain()
             ->is_simplex(pair.carrier)) {
      std::ostringstream msg;
      msg << "local domain " << part_index << " does not cover "
          << simplex_to_string(pair.carrier) << "; covering domains:";
      for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].chain.maps.front().domain()->is_simplex(pair.carrier)) {
          msg << ' ' << p;
        }
      }
      throw std::invalid_argument(msg.str());
    }
  } else {
    part_index = locate_in_part(system, pair.carrier);
  }

  const ContiguityChain& chain =
      system.certificate().parts[static_cast<std::size_t>(part_index)].chain;
  std::vector<BarycentricPoint> waypoints;
  waypoints.reserve(chain.maps.size() + 2);
  waypoints.push_back(a);
  for (const SimplicialMap& map : chain.maps) {
    waypoints.push_back(pushforward(map, pair));
  }
  waypoints.push_back(b);
  return waypoints;
}

}  // namespace contig
