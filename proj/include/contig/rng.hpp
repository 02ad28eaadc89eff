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

#ifndef CONTIG_RNG_HPP_
#define CONTIG_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace contig {

/// Seeded deterministic random stream. The mt19937_64 engine is bit-exact by
/// the standard, and the bounded draws below avoid std::uniform_*_distribution
/// on purpose: those are implementation-defined, which would break the
/// same-seed-same-trace guarantee across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, n). Rejection sampling over a power-of-two mask.
  std::size_t uniform_index(std::size_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0};
    mask >>= __builtin_clzll(static_cast<unsigned long long>(n - 1));
    for (;;) {
      const std::uint64_t draw = engine_() & mask;
      if (draw < n) return static_cast<std::size_t>(draw);
    }
  }

  /// Uniform in [0, 1) with 53 significant bits.
  double uniform_real() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform_index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace contig

#endif  // CONTIG_RNG_HPP_
