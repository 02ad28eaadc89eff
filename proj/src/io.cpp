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

#include "contig/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace contig {

using nlohmann::json;

namespace {

json simplices_to_json(const std::vector<Simplex>& simplices) {
  json out = json::array();
  for (const Simplex& s : simplices) out.push_back(s);
  return out;
}

std::vector<Simplex> simplices_from_json(const json& j,
                                         const std::string& where) {
  if (!j.is_array()) {
    throw std::invalid_argument(where + " must be an array of simplices");
  }
  std::vector<Simplex> out;
  for (const auto& entry : j) {
    if (!entry.is_array()) {
      throw std::invalid_argument(where + " entries must be vertex arrays");
    }
    out.push_back(entry.get<Simplex>());
  }
  return out;
}

std::vector<VertexId> assignment_from_json(const json& j, std::size_t expected,
                                           const std::string& where) {
  if (!j.is_array() || j.size() != expected) {
    throw std::invalid_argument(where + " must assign exactly " +
                                std::to_string(expected) + " values");
  }
  return j.get<std::vector<VertexId>>();
}

}  // namespace

json complex_to_json(const ComplexFile& file) {
  json out;
  out["vertex_count"] = file.complex.vertex_count();
  out["facets"] = simplices_to_json(file.complex.facets());
  if (file.codec) out["codec"] = *file.codec;
  if (file.product_of) out["product_of"] = *file.product_of;
  return out;
}

ComplexFile complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("facets")) {
    throw std::invalid_argument("complex must be an object with \"facets\"");
  }
  ComplexFile file{
      Complex::from_facets(simplices_from_json(j["facets"], "facets")), {}, {}};
  if (j.contains("vertex_count") &&
      j["vertex_count"].get<int>() != file.complex.vertex_count()) {
    throw std::invalid_argument(
        "vertex_count disagrees with the facets: expected " +
        std::to_string(file.complex.vertex_count()));
  }
  if (j.contains("codec")) file.codec = j["codec"].get<int>();
  if (j.contains("product_of")) {
    file.product_of = j["product_of"].get<std::vector<std::string>>();
  }
  return file;
}

json chain_to_json(const ContiguityChain& chain) {
  if (chain.maps.empty()) {
    throw std::invalid_argument("cannot serialize an empty chain");
  }
  json out;
  out["domain"] = complex_to_json({*chain.maps.front().domain(), {}, {}});
  out["codomain"] = complex_to_json({*chain.maps.front().codomain(), {}, {}});
  json maps = json::array();
  for (const SimplicialMap& map : chain.maps) maps.push_back(map.values());
  out["maps"] = std::move(maps);
  return out;
}

ContiguityChain chain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
      !j.contains("maps")) {
    throw std::invalid_argument(
        "chain must be an object with domain, codomain and maps");
  }
  ComplexPtr domain = make_complex(complex_from_json(j["domain"]).complex);
  ComplexPtr codomain = make_complex(complex_from_json(j["codomain"]).complex);
  ContiguityChain chain;
  for (const auto& values : j["maps"]) {
    chain.maps.emplace_back(
        domain, codomain,
        assignment_from_json(values, domain->vertices().size(), "chain map"));
  }
  if (chain.maps.empty()) {
    throw std::invalid_argument("chain must contain at least one map");
  }
  return chain;
}

SimplicialMap map_from_spec(const json& spec, ComplexPtr domain,
                            ComplexPtr codomain,
                            std::optional<int> domain_codec,
                            std::optional<int> codomain_codec) {
  if (spec.is_array()) {
    return SimplicialMap(
        domain, codomain,
        assignment_from_json(spec, domain->vertices().size(), "map"));
  }
  if (!spec.is_string()) {
    throw std::invalid_argument(
        "map spec must be an assignment array or an identifier string");
  }
  const std::string name = spec.get<std::string>();
  auto parse_suffix = [&name](const std::string& prefix) {
    return std::stoi(name.substr(prefix.size()));
  };
  if (name == "identity") {
    if (*domain != *codomain) {
      throw std::invalid_argument(
          "identity needs equal domain and codomain");
    }
    return SimplicialMap(domain, codomain, domain->vertices());
  }
  if (name == "pi1" || name == "pi2") {
    if (!domain_codec) {
      throw std::invalid_argument(
          "projections need a codec on the domain complex");
    }
    const ProductVertexCodec codec{0, *domain_codec};
    std::vector<VertexId> values;
    values.reserve(domain->vertices().size());
    for (VertexId v : domain->vertices()) {
      values.push_back(name == "pi1" ? codec.left_of(v) : codec.right_of(v));
    }
    return SimplicialMap(std::move(domain), std::move(codomain),
                         std::move(values));
  }
  if (name.rfind("constant:", 0) == 0) {
    return constant_map(std::move(domain), std::move(codomain),
                        parse_suffix("constant:"));
  }
  if (name.rfind("iota1:", 0) == 0 || name.rfind("iota2:", 0) == 0) {
    if (!codomain_codec) {
      throw std::invalid_argument(
          "axial inclusions need a codec on the codomain complex");
    }
    const bool first_axis = name.rfind("iota1:", 0) == 0;
    const VertexId base = parse_suffix("iota1:");
    const ProductVertexCodec codec{0, *codomain_codec};
    std::vector<VertexId> values;
    values.reserve(domain->vertices().size());
    for (VertexId v : domain->vertices()) {
      values.push_back(first_axis ? codec.encode(v, base)
                                  : codec.encode(base, v));
    }
    return SimplicialMap(std::move(domain), std::move(codomain),
                         std::move(values));
  }
  throw std::invalid_argument("unknown map spec \"" + name + "\"");
}

json cover_to_json(const CoverCertificate& certificate,
                   std::optional<std::string> psi_spec,
                   std::optional<std::string> psi_prime_spec,
                   std::optional<int> domain_codec) {
  json out;
  out["domain"] = complex_to_json({*certificate.domain, domain_codec, {}});
  out["codomain"] = complex_to_json({*certificate.psi.codomain(), {}, {}});
  out["psi"] = psi_spec ? json(*psi_spec) : json(certificate.psi.values());
  out["psi_prime"] = psi_prime_spec ? json(*psi_prime_spec)
                                    : json(certificate.psi_prime.values());
  json parts = json::array();
  for (const CoverPart& part : certificate.parts) {
    json p;
    p["facets"] = simplices_to_json(part.facet_subset);
    json maps = json::array();
    for (const SimplicialMap& map : part.chain.maps) {
      maps.push_back(map.values());
    }
    p["maps"] = std::move(maps);
    parts.push_back(std::move(p));
  }
  out["parts"] = std::move(parts);
  return out;
}

CoverCertificate cover_from_json(const json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
      !j.contains("psi") || !j.contains("psi_prime") || !j.contains("parts")) {
    throw std::invalid_argument(
        "cover must be an object with domain, codomain, psi, psi_prime and "
        "parts");
  }
  const ComplexFile domain_file = complex_from_json(j["domain"]);
  const ComplexFile codomain_file = complex_from_json(j["codomain"]);
  ComplexPtr domain = make_complex(domain_file.complex);
  ComplexPtr codomain = make_complex(codomain_file.complex);
  SimplicialMap psi = map_from_spec(j["psi"], domain, codomain,
                                    domain_file.codec, codomain_file.codec);
  SimplicialMap psi_prime =
      map_from_spec(j["psi_prime"], domain, codomain, domain_file.codec,
                    codomain_file.codec);
  CoverCertificate certificate{domain, std::move(psi), std::move(psi_prime),
                               {}};
  for (const auto& part : j["parts"]) {
    if (!part.is_object() || !part.contains("facets") ||
        !part.contains("maps")) {
      throw std::invalid_argument("cover part needs facets and maps");
    }
    std::vector<Simplex> facets =
        simplices_from_json(part["facets"], "part facets");
    ComplexPtr sub = make_complex(generated_subcomplex(*domain, facets));
    ContiguityChain chain;
    for (const auto& values : part["maps"]) {
      chain.maps.emplace_back(
          sub, codomain,
          assignment_from_json(values, sub->vertices().size(), "part map"));
    }
    certificate.parts.push_back(CoverPart{std::move(facets), std::move(chain)});
  }
  return certificate;
}

PlannerSystem planner_system_from_json(const json& j) {
  const ComplexFile domain_file = complex_from_json(j.at("domain"));
  if (!domain_file.codec) {
    throw std::invalid_argument(
        "planner system needs a codec on the cover's domain");
  }
  CoverCertificate certificate = cover_from_json(j);
  ComplexPtr base = certificate.psi.codomain();
  ComplexPtr square = certificate.domain;
  const ProductVertexCodec codec{base->vertex_count(), *domain_file.codec};
  return PlannerSystem(std::move(base), std::move(square), codec,
                       std::move(certificate));
}

json waypoints_to_json(const std::vector<BarycentricPoint>& path) {
  json out = json::array();
  for (const BarycentricPoint& point : path) {
    json p;
    p["carrier"] = point.carrier;
    json weights = json::array();
    json exact = json::array();
    for (const Rational& w : point.weights) {
      weights.push_back(boost::rational_cast<double>(w));
      exact.push_back(rational_to_string(w));
    }
    p["weights"] = std::move(weights);
    p["weights_exact"] = std::move(exact);
    out.push_back(std::move(p));
  }
  return out;
}

json run_report_to_json(const RunReport& report) {
  json params;
  params["M"] = report.params.max_iterations;
  params["r"] = report.params.accept_probability;
  params["N"] = report.params.optimize_rounds;
  params["t"] = report.params.target_parts;
  params["variant"] = report.params.variant == SearchVariant::kBasic
                          ? "basic"
                          : "neighborhood";
  json out;
  out["seed"] = report.seed;
  out["params"] = std::move(params);
  out["iterations_used"] = report.iterations_used;
  out["part_sizes_history"] = report.part_sizes_history;
  out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

std::string chain_to_tsv(const ContiguityChain& chain) {
  if (chain.maps.empty()) {
    throw std::invalid_argument("cannot export an empty chain");
  }
  std::ostringstream out;
  for (VertexId v : chain.maps.front().domain()->vertices()) {
    out << '\t' << v;
  }
  out << '\n';
  for (std::size_t i = 0; i < chain.maps.size(); ++i) {
    out << "phi_" << i;
    for (VertexId value : chain.maps[i].values()) out << '\t' << value;
    out << '\n';
  }
  return out.str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const long long num = std::stoll(text.substr(0, slash));
      const long long den = std::stoll(text.substr(slash + 1));
      return Rational{num, den};
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational{std::stoll(text)};
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational{std::stoll(digits), den};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational \"" + text + "\"");
  }
}

std::string rational_to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << contents;
}

}  // namespace contig
