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

#include "srsearch/audio_buffer.h"

#include <cmath>

#include "srsearch/errors.h"

namespace srsearch {

void CheckAudio(const AudioBuffer& buffer) {
  if (buffer.sample_rate_hz <= 0) {
    throw ParameterError("sample rate must be positive");
  }
  if (buffer.samples.empty()) throw ParameterError("empty audio buffer");
  for (const float s : buffer.samples) {
    if (!std::isfinite(s)) throw ParameterError("non-finite audio sample");
  }
}

double Rms(const AudioBuffer& buffer) {
  if (buffer.samples.empty()) return 0.0;
  double acc = 0.0;
  for (const float s : buffer.samples) acc += static_cast<double>(s) * s;
  return std::sqrt(acc / buffer.samples.size());
}

}  // namespace srsearch
