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

#include "contig/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace contig {

namespace {

bool subset_of(const Simplex& small, const Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Simplex normalize_simplex(Simplex vertices) {
  if (vertices.empty()) {
    throw std::invalid_argument("simplex must be nonempty");
  }
  for (VertexId v : vertices) {
    if (v < 0) {
      throw std::invalid_argument("vertex labels must be non-negative, got " +
                                  std::to_string(v));
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  return vertices;
}

Complex Complex::from_facets(std::vector<Simplex> facet_candidates) {
  if (facet_candidates.empty()) {
    throw std::invalid_argument("complex needs at least one facet");
  }
  for (Simplex& f : facet_candidates) {
    f = normalize_simplex(std::move(f));
  }
  std::sort(facet_candidates.begin(), facet_candidates.end());
  facet_candidates.erase(
      std::unique(facet_candidates.begin(), facet_candidates.end()),
      facet_candidates.end());

  // Drop candidates contained in a larger one. Quadratic, but facet lists in
  // this library stay small enough for that to be a non-issue.
  std::vector<Simplex> maximal;
  maximal.reserve(facet_candidates.size());
  for (std::size_t i = 0; i < facet_candidates.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < facet_candidates.size() && !contained; ++j) {
      if (i != j && facet_candidates[i].size() < facet_candidates[j].size() &&
          subset_of(facet_candidates[i], facet_candidates[j])) {
        contained = true;
      }
    }
    if (!contained) maximal.push_back(facet_candidates[i]);
  }

  Complex result;
  result.facets_ = std::move(maximal);

  std::set<VertexId> vertex_set;
  for (const Simplex& f : result.facets_) {
    vertex_set.insert(f.begin(), f.end());
  }
  result.vertices_.assign(vertex_set.begin(), vertex_set.end());

  const int n = result.vertex_count();
  std::vector<int> degree(n, 0);
  for (const Simplex& f : result.facets_) {
    for (VertexId v : f) ++degree[result.vertex_index(v)];
  }
  result.star_offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    result.star_offsets_[i + 1] = result.star_offsets_[i] + degree[i];
  }
  result.star_data_.resize(result.star_offsets_[n]);
  std::vector<int> cursor(result.star_offsets_.begin(),
                          result.star_offsets_.end() - 1);
  for (int fi = 0; fi < result.facet_count(); ++fi) {
    for (VertexId v : result.facets_[fi]) {
      result.star_data_[cursor[result.vertex_index(v)]++] = fi;
    }
  }
  return result;
}

int Complex::dimension() const {
  std::size_t largest = 0;
  for (const Simplex& f : facets_) largest = std::max(largest, f.size());
  return static_cast<int>(largest) - 1;
}

bool Complex::is_dense() const {
  return vertices_.empty() ? false
                           : vertices_.back() == vertex_count() - 1;
}

int Complex::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

std::span<const int> Complex::facets_containing(VertexId v) const {
  const int idx = vertex_index(v);
  if (idx < 0) return {};
  return {star_data_.data() + star_offsets_[idx],
          star_data_.data() + star_offsets_[idx + 1]};
}

bool Complex::is_simplex(const Simplex& s) const {
  if (s.empty()) return false;
  for (int fi : facets_containing(s.front())) {
    if (subset_of(s, facets_[fi])) return true;
  }
  return false;
}

Complex build_complex(const std::vector<std::vector<int>>& facet_lists) {
  std::vector<Simplex> candidates(facet_lists.begin(), facet_lists.end());
  Complex result = Complex::from_facets(std::move(candidates));
  const VertexId max_label = result.vertices().back();
  if (!result.is_dense()) {
    for (VertexId v = 0; v <= max_label; ++v) {
      if (result.vertex_index(v) < 0) {
        throw std::invalid_argument(
            "vertex labels are not dense: label " + std::to_string(v) +
            " is missing while the maximum label is " +
            std::to_string(max_label));
      }
    }
  }
  return result;
}

Complex ordered_product(const Complex& left, const Complex& right) {
  if (!left.is_dense() || !right.is_dense()) {
    throw std::invalid_argument(
        "ordered_product requires dense vertex labels on both factors");
  }
  const ProductVertexCodec codec = product_codec(left, right);

  // Facets are the monotone staircases through each pair of facets: all
  // interleavings of (|sigma|-1) steps in the left factor with (|tau|-1)
  // steps in the right factor.
  std::vector<Simplex> staircases;
  std::vector<int> moves;  // 0 = advance left, 1 = advance right
  for (const Simplex& sigma : left.facets()) {
    for (const Simplex& tau : right.facets()) {
      const int s = static_cast<int>(sigma.size());
      const int t = static_cast<int>(tau.size());
      moves.assign(s - 1, 0);
      moves.insert(moves.end(), t - 1, 1);
      std::sort(moves.begin(), moves.end());
      do {
        Simplex chain;
        chain.reserve(s + t - 1);
        int i = 0, j = 0;
        chain.push_back(codec.encode(sigma[0], tau[0]));
        for (int move : moves) {
          if (move == 0) {
            ++i;
          } else {
            ++j;
          }
          chain.push_back(codec.encode(sigma[i], tau[j]));
        }
        staircases.push_back(std::move(chain));
      } while (std::next_permutation(moves.begin(), moves.end()));
    }
  }
  return Complex::from_facets(std::move(staircases));
}

std::vector<Simplex> all_simplices(const Complex& complex) {
  // Enumerate the downward closure facet by facet; deduplicate in a set
  // ordered by (dimension, lex) so barycenter labels are deterministic.
  auto by_dim_then_lex = [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::set<Simplex, decltype(by_dim_then_lex)> closure(by_dim_then_lex);
  for (const Simplex& f : complex.facets()) {
    const std::size_t n = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (std::uint64_t{1} << k)) face.push_back(f[k]);
      }
      closure.insert(std::move(face));
    }
  }
  return {closure.begin(), closure.end()};
}

long long euler_characteristic(const Complex& complex) {
  long long chi = 0;
  for (const Simplex& s : all_simplices(complex)) {
    chi += (s.size() % 2 == 1) ? 1 : -1;
  }
  return chi;
}

Subdivision barycentric_subdivision(const Complex& base) {
  std::vector<Simplex> faces = all_simplices(base);
  // Map each face to its new vertex label via binary search over `faces`.
  auto label_of = [&faces](const Simplex& face) -> VertexId {
    auto cmp = [](const Simplex& a, const Simplex& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    };
    auto it = std::lower_bound(faces.begin(), faces.end(), face, cmp);
    return static_cast<VertexId>(it - faces.begin());
  };

  // One facet of the subdivision per saturated flag, i.e. per ordering of the
  // vertices of a facet of the base.
  std::vector<Simplex> flags;
  for (const Simplex& facet : base.facets()) {
    Simplex order = facet;
    std::sort(order.begin(), order.end());
    do {
      Simplex flag;
      Simplex prefix;
      for (VertexId v : order) {
        prefix.push_back(v);
        Simplex sorted_prefix = prefix;
        std::sort(sorted_prefix.begin(), sorted_prefix.end());
        flag.push_back(label_of(sorted_prefix));
      }
      flags.push_back(normalize_simplex(std::move(flag)));
    } while (std::next_permutation(order.begin(), order.end()));
  }

  Subdivision result{Complex::from_facets(std::move(flags)),
                     std::move(faces)};
  return result;
}

Complex generated_subcomplex(const Complex& parent,
                             const std::vector<Simplex>& facet_subset) {
  if (facet_subset.empty()) {
    throw std::invalid_argument("facet subset must be nonempty");
  }
  std::vector<Simplex> facets;
  facets.reserve(facet_subset.size());
  for (Simplex f : facet_subset) {
    f = normalize_simplex(std::move(f));
    if (std::find(parent.facets().begin(), parent.facets().end(), f) ==
        parent.facets().end()) {
      throw std::invalid_argument("not a facet of the parent complex: " +
                                  simplex_to_string(f));
    }
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(std::move(facets));
}

DistanceTable::DistanceTable(std::vector<VertexId> vertices,
                             std::vector<int> distances)
    : vertices_(std::move(vertices)), distances_(std::move(distances)) {}

int DistanceTable::operator()(VertexId u, VertexId v) const {
  auto index = [this](VertexId w) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
    if (it == vertices_.end() || *it != w) {
      throw std::invalid_argument("vertex " + std::to_string(w) +
                                  " is not in the distance table");
    }
    return static_cast<int>(it - vertices_.begin());
  };
  return distances_[static_cast<std::size_t>(index(u)) * vertices_.size() +
                    index(v)];
}

namespace {

std::vector<std::vector<int>> skeleton_adjacency(const Complex& complex) {
  const int n = complex.vertex_count();
  std::vector<std::set<int>> nbr(n);
  for (const Simplex& f : complex.facets()) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        const int ia = complex.vertex_index(f[a]);
        const int ib = complex.vertex_index(f[b]);
        nbr[ia].insert(ib);
        nbr[ib].insert(ia);
      }
    }
  }
  std::vector<std::vector<int>> adjacency(n);
  for (int i = 0; i < n; ++i) adjacency[i].assign(nbr[i].begin(), nbr[i].end());
  return adjacency;
}

}  // namespace

bool is_connected(const Complex& complex) {
  const int n = complex.vertex_count();
  if (n == 0) return false;
  const auto adjacency = skeleton_adjacency(complex);
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (int next : adjacency[cur]) {
      if (!seen[next]) {
        seen[next] = 1;
        ++reached;
        queue.push_back(next);
      }
    }
  }
  return reached == n;
}

DistanceTable all_pairs_skeleton_distances(const Complex& complex) {
  const int n = complex.vertex_count();
  const auto adjacency = skeleton_adjacency(complex);
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int start = 0; start < n; ++start) {
    std::deque<int> queue{start};
    table[static_cast<std::size_t>(start) * n + start] = 0;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      const int dist = table[static_cast<std::size_t>(start) * n + cur];
      for (int next : adjacency[cur]) {
        int& slot = table[static_cast<std::size_t>(start) * n + next];
        if (slot < 0) {
          slot = dist + 1;
          queue.push_back(next);
        }
      }
    }
    for (int other = 0; other < n; ++other) {
      if (table[static_cast<std::size_t>(start) * n + other] < 0) {
        throw std::invalid_argument(
            "complex is disconnected: no path between vertices " +
            std::to_string(complex.vertices()[start]) + " and " +
            std::to_string(complex.vertices()[other]) +
            " (the estimators assume connected complexes)");
      }
    }
  }
  return DistanceTable(complex.vertices(), std::move(table));
}

std::string simplex_to_string(const Simplex& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

}  // namespace contig
