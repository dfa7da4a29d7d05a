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

#ifndef SRSEARCH_LOWPASS_H_
#define SRSEARCH_LOWPASS_H_

#include <vector>

#include "srsearch/audio_buffer.h"

namespace srsearch {

// Kaiser-windowed sinc low-pass taps. The stopband starts at `stop_hz`, the
// transition band is `transition_hz` wide below it and the stopband
// attenuation of a single pass is at least `attenuation_db`.
std::vector<double> DesignKaiserLowpass(double stop_hz, double transition_hz,
                                        double attenuation_db,
                                        int sample_rate_hz);

// Forward-backward application of the symmetric kernel `h` (zero phase,
// squared magnitude response). Both ends are extended by linear prediction
// before filtering. Output has the input's length.
AudioBuffer FilterZeroPhase(const AudioBuffer& x, const std::vector<double>& h);

// Band-limits `hr` to `cutoff_hz` without changing its rate or length.
// Throws ParameterError unless 0 < cutoff_hz < sample_rate / 2.
AudioBuffer MakeLowres(const AudioBuffer& hr, double cutoff_hz);

}  // namespace srsearch

#endif  // SRSEARCH_LOWPASS_H_
