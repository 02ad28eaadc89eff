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

#include "contig/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace contig {

namespace {

// Deliberately naive re-implementations: linear facet scans, no indices.

bool verifier_subset(const Simplex& small, const Simplex& big) {
  std::size_t j = 0;
  for (VertexId v : small) {
    while (j < big.size() && big[j] < v) ++j;
    if (j == big.size() || big[j] != v) return false;
  }
  return true;
}

bool verifier_is_simplex(const Complex& complex, const Simplex& s) {
  if (s.empty()) return false;
  for (const Simplex& facet : complex.facets()) {
    if (verifier_subset(s, facet)) return true;
  }
  return false;
}

Simplex verifier_image(const SimplicialMap& map, const Simplex& s) {
  std::set<VertexId> img;
  for (VertexId v : s) img.insert(map.apply(v));
  return Simplex(img.begin(), img.end());
}

VerifyResult fail(std::string message) {
  return VerifyResult{false, std::move(message)};
}

VerifyResult check_map_simplicial(const SimplicialMap& map, int position) {
  for (const Simplex& facet : map.domain()->facets()) {
    const Simplex img = verifier_image(map, facet);
    if (!verifier_is_simplex(*map.codomain(), img)) {
      std::ostringstream msg;
      msg << "map " << position << " is not simplicial: facet "
          << simplex_to_string(facet) << " has image " << simplex_to_string(img)
          << ", which is not a simplex of the codomain";
      return fail(msg.str());
    }
  }
  return VerifyResult{true, {}};
}

VerifyResult check_pair_contiguous(const SimplicialMap& a,
                                   const SimplicialMap& b, int position) {
  for (const Simplex& facet : a.domain()->facets()) {
    std::set<VertexId> joint;
    for (VertexId v : facet) {
      joint.insert(a.apply(v));
      joint.insert(b.apply(v));
    }
    const Simplex joined(joint.begin(), joint.end());
    if (!verifier_is_simplex(*a.codomain(), joined)) {
      std::ostringstream msg;
      msg << "maps " << position << " and " << position + 1
          << " are not 1-contiguous: facet " << simplex_to_string(facet)
          << " has joint image " << simplex_to_string(joined)
          << ", which is not a simplex of the codomain";
      return fail(msg.str());
    }
  }
  return VerifyResult{true, {}};
}

}  // namespace

VerifyResult verify_chain(const ContiguityChain& chain,
                          const SimplicialMap& expected_start,
                          const SimplicialMap& expected_end) {
  if (chain.maps.empty()) return fail("chain has no maps");
  for (std::size_t i = 0; i < chain.maps.size(); ++i) {
    if (!chain.maps[i].same_endpoints_as(chain.maps.front())) {
      return fail("map " + std::to_string(i) +
                  " does not share the chain's domain and codomain");
    }
  }
  if (!expected_start.same_endpoints_as(chain.maps.front())) {
    return fail("expected start map lives on different complexes");
  }
  if (chain.maps.front().values() != expected_start.values()) {
    return fail("chain does not start at the expected map");
  }
  if (chain.maps.back().values() != expected_end.values()) {
    return fail("chain does not end at the expected map");
  }
  for (std::size_t i = 0; i < chain.maps.size(); ++i) {
    if (VerifyResult r = check_map_simplicial(chain.maps[i],
                                              static_cast<int>(i));
        !r) {
      return r;
    }
  }
  for (std::size_t i = 0; i + 1 < chain.maps.size(); ++i) {
    if (VerifyResult r = check_pair_contiguous(
            chain.maps[i], chain.maps[i + 1], static_cast<int>(i));
        !r) {
      return r;
    }
  }
  return VerifyResult{true, {}};
}

VerifyResult verify_cover(const CoverCertificate& certificate) {
  if (!certificate.domain) return fail("certificate has no domain complex");
  if (certificate.parts.empty()) return fail("certificate has no parts");
  const Complex& domain = *certificate.domain;
  if (*certificate.psi.domain() != domain ||
      *certificate.psi_prime.domain() != domain) {
    return fail("source maps are not defined on the certificate domain");
  }
  if (!certificate.psi.same_endpoints_as(certificate.psi_prime)) {
    return fail("source maps do not share domain and codomain");
  }

  // Exact partition of the facet list.
  std::set<Simplex> seen;
  for (std::size_t p = 0; p < certificate.parts.size(); ++p) {
    const auto& subset = certificate.parts[p].facet_subset;
    if (subset.empty()) {
      return fail("part " + std::to_string(p) + " is empty");
    }
    for (const Simplex& f : subset) {
      if (std::find(domain.facets().begin(), domain.facets().end(), f) ==
          domain.facets().end()) {
        return fail("part " + std::to_string(p) + " lists " +
                    simplex_to_string(f) +
                    ", which is not a facet of the domain");
      }
      if (!seen.insert(f).second) {
        return fail("facet " + simplex_to_string(f) +
                    " appears in more than one part");
      }
    }
  }
  for (const Simplex& f : domain.facets()) {
    if (seen.find(f) == seen.end()) {
      return fail("facet " + simplex_to_string(f) +
                  " is not covered by any part");
    }
  }

  for (std::size_t p = 0; p < certificate.parts.size(); ++p) {
    const CoverPart& part = certificate.parts[p];
    Complex subcomplex = generated_subcomplex(domain, part.facet_subset);
    if (part.chain.maps.empty()) {
      return fail("part " + std::to_string(p) + " has an empty chain");
    }
    if (*part.chain.maps.front().domain() != subcomplex) {
      return fail("part " + std::to_string(p) +
                  ": chain domain is not the subcomplex its facets generate");
    }
    ComplexPtr sub = part.chain.maps.front().domain();
    const SimplicialMap start = certificate.psi.restrict_to(sub);
    const SimplicialMap end = certificate.psi_prime.restrict_to(sub);
    if (VerifyResult r = verify_chain(part.chain, start, end); !r) {
      return fail("part " + std::to_string(p) + ": " + r.diagnostic);
    }
  }
  return VerifyResult{true, {}};
}

}  // namespace contig
