// Copyright 2026 The qord Authors
//
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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qord/ring.hpp"

namespace qord {

struct Bounds {
  Integer height = 9;       // absolute bound on numerators
  Integer den_height = 9;   // bound on denominators
  unsigned degree = 2;      // per-variable exponent bound
  unsigned terms = 3;       // terms per polynomial
};

/// Deterministic random source; the sequence depends only on the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n ? engine_() % n : 0; }
  Integer between(const Integer& lo, const Integer& hi);
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/**
 * Sampling request. The generated list starts with the distinguished
 * elements in the order given, then 0, 1, -1, then `count` random elements
 * within the bounds.
 */
struct SampleSpec {
  std::uint64_t seed = 42;
  std::size_t count = 200;
  Bounds bounds;
  std::vector<Element> distinguished;
};

std::vector<Element> generate(const RingPtr& ring, const SampleSpec& spec);

Element random_element(const RingPtr& ring, Rng& rng, const Bounds& bounds);

/// Appends `extra` to `pool`, skipping elements already present.
void merge_unique(std::vector<Element>& pool, const std::vector<Element>& extra);

/**
 * Tuple sweeps over a pool. Every sweep first walks all tuples of a short
 * prefix of the pool in order (so distinguished elements are seen first),
 * then `budget` random tuples. The visitor returns true to stop early.
 * Each function returns the number of tuples visited.
 */
struct Sweep {
  std::uint64_t seed = 42;
  std::size_t budget = 200;
  std::size_t pair_prefix = 24;
  std::size_t triple_prefix = 8;

  template <class F>
  std::size_t singles(const std::vector<Element>& pool, F&& f) const {
    std::size_t n = 0;
    for (const auto& x : pool) {
      ++n;
      if (f(x)) break;
    }
    return n;
  }

  template <class F>
  std::size_t pairs(const std::vector<Element>& pool, F&& f) const {
    std::size_t n = 0;
    if (pool.empty()) return 0;
    const std::size_t k = std::min(pool.size(), pair_prefix);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        ++n;
        if (f(pool[i], pool[j])) return n;
      }
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t t = 0; t < budget; ++t) {
      const auto& x = pool[rng.below(pool.size())];
      const auto& y = pool[rng.below(pool.size())];
      ++n;
      if (f(x, y)) return n;
    }
    return n;
  }

  template <class F>
  std::size_t triples(const std::vector<Element>& pool, F&& f) const {
    std::size_t n = 0;
    if (pool.empty()) return 0;
    const std::size_t k = std::min(pool.size(), triple_prefix);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          ++n;
          if (f(pool[i], pool[j], pool[l])) return n;
        }
    Rng rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    for (std::size_t t = 0; t < budget; ++t) {
      const auto& x = pool[rng.below(pool.size())];
      const auto& y = pool[rng.below(pool.size())];
      const auto& z = pool[rng.below(pool.size())];
      ++n;
      if (f(x, y, z)) return n;
    }
    return n;
  }
};

}  // namespace qord
