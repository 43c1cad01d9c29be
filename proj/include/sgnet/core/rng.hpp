// Copyright 2026 The SGNet Authors.
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

#ifndef SGNET_CORE_RNG_HPP_
#define SGNET_CORE_RNG_HPP_

#include <cstdint>
#include <random>
#include <string>

namespace sgnet {

// splitmix64 finalizer; used to derive independent streams from one seed.
inline uint64_t mix_seed(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  return mix_seed(seed ^ mix_seed(salt));
}

inline uint64_t mix_seed(uint64_t seed, const std::string& salt) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : salt) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return mix_seed(seed, h);
}

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(mix_seed(seed)); }

// Fisher-Yates with an explicit engine so shuffles are reproducible across
// standard library implementations.
template <typename Vec>
void deterministic_shuffle(Vec& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace sgnet

#endif  // SGNET_CORE_RNG_HPP_
