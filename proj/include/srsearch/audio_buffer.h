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

#ifndef SRSEARCH_AUDIO_BUFFER_H_
#define SRSEARCH_AUDIO_BUFFER_H_

#include <vector>

namespace srsearch {

// Mono waveform. Samples are nominally in [-1, 1].
struct AudioBuffer {
  std::vector<float> samples;
  int sample_rate_hz = 0;

  std::size_t size() const { return samples.size(); }
  bool operator==(const AudioBuffer&) const = default;
};

// Throws ParameterError unless the buffer is non-empty, has a positive rate
// and only finite samples.
void CheckAudio(const AudioBuffer& buffer);

double Rms(const AudioBuffer& buffer);

}  // namespace srsearch

#endif  // SRSEARCH_AUDIO_BUFFER_H_
