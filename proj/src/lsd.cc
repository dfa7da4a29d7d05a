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

#include "srsearch/lsd.h"

#include <algorithm>
#include <cmath>

#include "srsearch/errors.h"

namespace srsearch {

double SpectrogramLsd(const Grid<double>& a, const Grid<double>& b,
                      std::size_t bin_begin, std::size_t bin_end) {
  if (!a.SameShape(b)) throw DimensionError("spectrogram shapes differ");
  bin_end = std::min(bin_end, a.cols());
  if (a.rows() == 0 || bin_begin >= bin_end) {
    throw DimensionError("empty spectrogram or bin range");
  }
  const double bins = static_cast<double>(bin_end - bin_begin);
  double total = 0.0;
  for (std::size_t t = 0; t < a.rows(); ++t) {
    const double* ra = a.row(t);
    const double* rb = b.row(t);
    double acc = 0.0;
    for (std::size_t f = bin_begin; f < bin_end; ++f) {
      const double d = std::log10(ra[f] * ra[f] + kLsdEpsilon) -
                       std::log10(rb[f] * rb[f] + kLsdEpsilon);
      acc += d * d;
    }
    total += std::sqrt(acc / bins);
  }
  return total / static_cast<double>(a.rows());
}

double Lsd(const AudioBuffer& gen, const AudioBuffer& ref,
           const StftParams& params) {
  if (gen.sample_rate_hz != ref.sample_rate_hz) {
    throw ParameterError("LSD inputs have different sample rates");
  }
  const std::size_t n = std::min(gen.size(), ref.size());
  if (n == 0) throw ParameterError("empty audio buffer");
  if (gen.size() == n && ref.size() == n) {
    return SpectrogramLsd(Stft(ref, params).mags, Stft(gen, params).mags);
  }
  AudioBuffer g{{gen.samples.begin(), gen.samples.begin() + n},
                gen.sample_rate_hz};
  AudioBuffer r{{ref.samples.begin(), ref.samples.begin() + n},
                ref.sample_rate_hz};
  return SpectrogramLsd(Stft(r, params).mags, Stft(g, params).mags);
}

}  // namespace srsearch
