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

#ifndef SRSEARCH_GENERATOR_H_
#define SRSEARCH_GENERATOR_H_

#include "srsearch/audio_buffer.h"
#include "srsearch/random.h"

namespace srsearch {

// Declared by every generator so the search never assumes a latent size.
struct GeneratorInfo {
  int noise_dim = 0;
  int output_sample_rate_hz = 0;
  bool deterministic = true;

  bool operator==(const GeneratorInfo&) const = default;
};

// Maps (low-resolution input, latent noise) to a high-resolution candidate.
// Generate must be callable from several threads at once.
class Generator {
 public:
  virtual ~Generator() = default;

  virtual GeneratorInfo Info() const = 0;
  virtual AudioBuffer Generate(const AudioBuffer& lr,
                               const LatentNoise& noise) const = 0;
};

}  // namespace srsearch

#endif  // SRSEARCH_GENERATOR_H_
