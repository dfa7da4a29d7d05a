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

#ifndef SRSEARCH_ANALYSIS_H_
#define SRSEARCH_ANALYSIS_H_

#include <filesystem>
#include <vector>

#include "srsearch/grid.h"
#include "srsearch/stft.h"

namespace srsearch {

// Spectrograms of N candidates generated from one input.
struct CandidateSet {
  std::vector<Spectrogram> spectrograms;

  std::size_t size() const { return spectrograms.size(); }
};

// Throws DimensionError unless all members share shape and STFT parameters,
// and ParameterError if fewer than `min_size` members are present.
void CheckCandidateSet(const CandidateSet& set, std::size_t min_size = 2);

// Element-wise mean of the linear magnitudes.
Grid<double> MeanSpectrogram(const CandidateSet& set);

// Mean LSD between each candidate's magnitudes and the mean spectrogram.
double SearchSpaceVariance(const CandidateSet& set);

enum class VarianceDomain { kLinear, kLog };

inline constexpr double kUncertaintyEpsilon = 1e-12;
inline constexpr double kDefaultClipPercentile = 90.0;

struct UncertaintyMap {
  Grid<double> values;  // T x F, each in [0, 1]
  double epsilon = kUncertaintyEpsilon;
  // Percentile the map was clipped at for rendering; 100 when unclipped.
  double clip_percentile = 100.0;
};

// Per-bin population variance across the set, min-max normalized over the
// whole map: U = (var - min) / (max - min + epsilon). kLog computes the
// variance of log10 power instead of linear magnitude.
UncertaintyMap ComputeUncertaintyMap(const CandidateSet& set,
                                     double epsilon = kUncertaintyEpsilon,
                                     VarianceDomain domain = VarianceDomain::kLinear);

// Clips values above the nearest-rank percentile to that value, then divides
// by the new maximum (an all-zero map stays all zero).
UncertaintyMap ClipForRender(const UncertaintyMap& map, double percentile);

enum class MapFormat { kPgm, kCsv };

// PGM: binary P5, 8-bit, width T, height F, top row = highest bin,
// pixel = round(255 * U).
// CSV: a "# key=value" metadata line, then "t,f,u" and one row per bin with
// six decimals.
void ExportMap(const UncertaintyMap& map, const std::filesystem::path& path,
               MapFormat format);

}  // namespace srsearch

#endif  // SRSEARCH_ANALYSIS_H_
