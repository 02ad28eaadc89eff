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

#ifndef CONTIG_VERIFY_HPP_
#define CONTIG_VERIFY_HPP_

#include <string>
#include <vector>

#include "contig/contiguity.hpp"

namespace contig {

struct VerifyResult {
  bool ok = false;
  // Human-readable location of the first violation, empty when ok. Failures
  // are reported in canonical facet order so diagnostics are deterministic.
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// One local domain of a cover: a facet subset of the covered complex plus a
/// contiguity chain on the subcomplex those facets generate.
struct CoverPart {
  std::vector<Simplex> facet_subset;
  ContiguityChain chain;
};

/// A facet partition of `domain` where every part carries a chain between the
/// restrictions of the two source maps. verify_cover checks all invariants.
struct CoverCertificate {
  ComplexPtr domain;
  SimplicialMap psi;
  SimplicialMap psi_prime;
  std::vector<CoverPart> parts;

  int bound() const { return static_cast<int>(parts.size()) - 1; }
};

// The checks below recompute everything from the facet lists with their own
// plain scans. They intentionally share no predicate implementation with the
// search side, so a search bug cannot certify its own output.

/// Full chain check: nonempty, consistent endpoints across maps, every map
/// simplicial, consecutive maps 1-contiguous, and first/last equal to the
/// expected maps.
VerifyResult verify_chain(const ContiguityChain& chain,
                          const SimplicialMap& expected_start,
                          const SimplicialMap& expected_end);

/// Full certificate check: the facet subsets form an exact partition of the
/// domain's facets, each part's chain lives on the generated subcomplex, and
/// each chain verifies against the restricted source maps.
VerifyResult verify_cover(const CoverCertificate& certificate);

}  // namespace contig

#endif  // CONTIG_VERIFY_HPP_
