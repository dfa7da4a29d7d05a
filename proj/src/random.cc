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

#include "srsearch/random.h"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "srsearch/errors.h"

namespace srsearch {

LatentNoise SampleStandardNoise(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw ParameterError("noise dimension must be positive");
  SplitMix64Stream stream(seed);
  LatentNoise noise;
  noise.values.resize(dim);
  for (std::size_t i = 0; i < dim; i += 2) {
    // u1 in (0, 1] keeps the log finite.
    const double u1 = 1.0 - stream.NextUnit();
    const double u2 = stream.NextUnit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    noise.values[i] = radius * std::cos(angle);
    if (i + 1 < dim) noise.values[i + 1] = radius * std::sin(angle);
  }
  return noise;
}

std::uint64_t Fnv1a64(std::span<const double> values) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (const double v : values) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      hash ^= (bits >> (8 * b)) & 0xFF;
      hash *= 0x100000001B3ULL;
    }
  }
  return hash;
}

std::uint64_t NoiseDigest(const LatentNoise& noise) {
  return Fnv1a64(noise.values);
}

std::string HexDigest(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(digest));
  return buf;
}

}  // namespace srsearch
