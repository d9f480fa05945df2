// Copyright 2026 The subsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBSCHED_COMMON_HPP
#define SUBSCHED_COMMON_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace subsched {

using Vertex = uint32_t;

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results for identical inputs.
enum class Exec { serial, parallel };

/// SplitMix64 finalizer. Used to derive independent stream seeds from a
/// (seed, stream index) pair so parallel workers never share RNG state.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] (inclusive). Implemented directly so the
/// sequence does not depend on the standard library's distribution code.
inline uint64_t uniform_int(Rng &rng, uint64_t lo, uint64_t hi) {
    uint64_t span = hi - lo + 1;
    if (span == 0) {
        return rng();
    }
    uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
    uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return lo + r % span;
}

template <typename T>
void shuffle(std::vector<T> &items, Rng &rng) {
    for (size_t i = items.size(); i > 1; i--) {
        size_t j = uniform_int(rng, 0, i - 1);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace subsched

#endif
