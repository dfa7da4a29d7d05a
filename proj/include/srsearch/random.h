// Copyright 2026 The srsearch Authors.
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

#ifndef SRSEARCH_RANDOM_H_
#define SRSEARCH_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace srsearch {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer.
constexpr std::uint64_t SplitMixFinalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// One splitmix64 step from state `x`: the first output of a generator seeded
// with `x`.
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  return SplitMixFinalize(x + kGoldenGamma);
}

// Counter-based splitmix64 stream: output i is
// SplitMixFinalize(seed + (i + 1) * gamma), so any position is addressable.
class SplitMix64Stream {
 public:
  explicit SplitMix64Stream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t At(std::uint64_t counter) const {
    return SplitMixFinalize(seed_ + (counter + 1) * kGoldenGamma);
  }
  std::uint64_t Next() { return At(counter_++); }
  // Uniform in [0, 1) with 53 bits.
  double NextUnit() { return (Next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Per-candidate seed: SplitMix64(master ^ (index * gamma)).
constexpr std::uint64_t DeriveSeed(std::uint64_t master_seed,
                                   std::uint64_t index) {
  return SplitMix64(master_seed ^ (index * kGoldenGamma));
}

struct LatentNoise {
  std::vector<double> values;

  std::size_t dim() const { return values.size(); }
  bool operator==(const LatentNoise&) const = default;
};

// I.i.d. N(0, 1) draws via Box-Muller over a SplitMix64Stream. Bit-exact for
// a given (dim, seed).
LatentNoise SampleStandardNoise(std::size_t dim, std::uint64_t seed);

// 64-bit FNV-1a over the little-endian IEEE-754 bytes of `values`.
std::uint64_t Fnv1a64(std::span<const double> values);
std::uint64_t NoiseDigest(const LatentNoise& noise);

// 16 lowercase hex digits.
std::string HexDigest(std::uint64_t digest);

}  // namespace srsearch

#endif  // SRSEARCH_RANDOM_H_
