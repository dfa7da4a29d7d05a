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

#ifndef SRSEARCH_CORPUS_H_
#define SRSEARCH_CORPUS_H_

#include <cstdint>
#include <vector>

#include "srsearch/audio_buffer.h"

namespace srsearch {

struct CorpusItem {
  AudioBuffer hr;
  AudioBuffer lr;
  double f0_hz = 0.0;
  int harmonics = 0;
};

// Seeded synthetic stand-in for a speech/music evaluation set. Each HR item
// is a harmonic series (f0 in [110, 440] Hz, 8 to 16 partials with 1/k
// amplitudes) plus noise confined to (cutoff, Nyquist) at -20 dB relative to
// the harmonics, peak-normalized to 0.5. LR items are MakeLowres(hr, cutoff).
std::vector<CorpusItem> MakeTestCorpus(int count, std::uint64_t seed,
                                       int sample_rate_hz, double duration_s,
                                       double cutoff_hz);

}  // namespace srsearch

#endif  // SRSEARCH_CORPUS_H_
