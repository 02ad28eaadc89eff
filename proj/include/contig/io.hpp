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

#ifndef CONTIG_IO_HPP_
#define CONTIG_IO_HPP_

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

#include "contig/planner.hpp"

// JSON file formats. All emitters keep keys in a stable (alphabetical) order
// so artifacts diff cleanly; all loaders validate and throw
// std::invalid_argument with the offending location.
//
// Complex:   {"facets": [[0,1],...], "vertex_count": 3}
//            products add {"codec": n, "product_of": [fileA, fileB]}
// Chain:     {"codomain": {...}, "domain": {...}, "maps": [[...], ...]}
//            assignments are listed in sorted domain-vertex order
// Cover:     {"codomain": {...}, "domain": {...}, "parts": [...],
//             "psi": <map spec>, "psi_prime": <map spec>}
//            each part is {"facets": [[...]], "maps": [[...], ...]}
// Map specs: "identity" | "pi1" | "pi2" | "constant:v" | "iota1:v" |
//            "iota2:v" | an explicit assignment array. The projections need
//            "codec" on the domain, the inclusions need it on the codomain.

namespace contig {

/// A complex plus the optional product metadata carried by its file.
struct ComplexFile {
  Complex complex;
  std::optional<int> codec;  // right factor vertex count
  std::optional<std::vector<std::string>> product_of;
};

nlohmann::json complex_to_json(const ComplexFile& file);
ComplexFile complex_from_json(const nlohmann::json& j);

nlohmann::json chain_to_json(const ContiguityChain& chain);
ContiguityChain chain_from_json(const nlohmann::json& j);

/// `psi_spec`/`psi_prime_spec` override the explicit assignment arrays with a
/// named map spec (e.g. "pi1"), and `domain_codec` is embedded so the file
/// doubles as a planner system.
nlohmann::json cover_to_json(const CoverCertificate& certificate,
                             std::optional<std::string> psi_spec = {},
                             std::optional<std::string> psi_prime_spec = {},
                             std::optional<int> domain_codec = {});
CoverCertificate cover_from_json(const nlohmann::json& j);

/// Reads a cover file as a planner system: the domain must carry a codec and
/// the source maps must be the two projections.
PlannerSystem planner_system_from_json(const nlohmann::json& j);

/// Resolves a map spec against the given endpoints.
SimplicialMap map_from_spec(const nlohmann::json& spec, ComplexPtr domain,
                            ComplexPtr codomain,
                            std::optional<int> domain_codec,
                            std::optional<int> codomain_codec);

nlohmann::json waypoints_to_json(const std::vector<BarycentricPoint>& path);

nlohmann::json run_report_to_json(const RunReport& report);

/// Renders a chain in the row-per-map, column-per-vertex layout: first column
/// is the map name (phi_0, phi_1, ...), the header row lists the domain
/// vertices.
std::string chain_to_tsv(const ContiguityChain& chain);

/// "p/q", "p", or a finite decimal such as "0.25"; all parsed exactly.
Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& value);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace contig

#endif  // CONTIG_IO_HPP_
