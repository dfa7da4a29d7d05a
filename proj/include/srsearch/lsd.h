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

#ifndef SRSEARCH_LSD_H_
#define SRSEARCH_LSD_H_

#include <cstddef>
#include <limits>

#include "srsearch/audio_buffer.h"
#include "srsearch/grid.h"
#include "srsearch/stft.h"

namespace srsearch {

inline constexpr double kLsdEpsilon = 1e-10;

// Log-spectral distance between two magnitude grids of equal shape:
//   (1/T) sum_t sqrt((1/F) sum_f (log10(|a|^2 + eps) - log10(|b|^2 + eps))^2)
// Only bins in [bin_begin, bin_end) enter the inner mean.
double SpectrogramLsd(const Grid<double>& a, const Grid<double>& b,
                      std::size_t bin_begin = 0,
                      std::size_t bin_end = std::numeric_limits<std::size_t>::max());

// Both buffers are truncated to the shorter length before analysis.
// Throws ParameterError on a sample-rate mismatch.
double Lsd(const AudioBuffer& gen, const AudioBuffer& ref,
           const StftParams& params = {});

}  // namespace srsearch

#endif  // SRSEARCH_LSD_H_
