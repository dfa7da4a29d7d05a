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

#include "srsearch/synthetic_generator.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "srsearch/errors.h"
#include "srsearch/lowpass.h"

namespace srsearch {
namespace {

// Width of the raised-cosine fade-in above the cutoff, as a fraction of it.
constexpr double kFadeFraction = 0.2;
// Stopband attenuation of the filter that keeps the synthesized band out of
// the input band.
constexpr double kBandSplitAttenuationDb = 100.0;

void CheckParams(const SyntheticGenParams& params, int sample_rate_hz) {
  if (params.time_cells < 1 || params.freq_cells < 1) {
    throw ParameterError("envelope grid must have at least one cell per axis");
  }
  if (!(params.sigma >= 0.0)) throw ParameterError("sigma must be >= 0");
  if (!(params.cutoff_hz > 0.0) || params.cutoff_hz >= 0.5 * sample_rate_hz) {
    throw ParameterError("generator cutoff must lie in (0, Nyquist)");
  }
  CheckStftParams(params.stft);
  if (params.stft.hop_len > params.stft.window_len / 2) {
    throw ParameterError("generator STFT needs hop_len <= window_len / 2");
  }
}

// Bilinear lookup into a cells_a x cells_b grid, with cell centers placed
// uniformly over lattice sizes size_a x size_b.
class CoarseGrid {
 public:
  CoarseGrid(const double* values, int cells_a, int cells_b)
      : values_(values), cells_a_(cells_a), cells_b_(cells_b) {}

  double At(std::size_t a, std::size_t size_a, std::size_t b,
            std::size_t size_b) const {
    const auto [a0, a1, wa] = Locate(a, size_a, cells_a_);
    const auto [b0, b1, wb] = Locate(b, size_b, cells_b_);
    const double v00 = values_[a0 * cells_b_ + b0];
    const double v01 = values_[a0 * cells_b_ + b1];
    const double v10 = values_[a1 * cells_b_ + b0];
    const double v11 = values_[a1 * cells_b_ + b1];
    return (1.0 - wa) * ((1.0 - wb) * v00 + wb * v01) +
           wa * ((1.0 - wb) * v10 + wb * v11);
  }

 private:
  struct Span {
    int lo;
    int hi;
    double weight;
  };

  static Span Locate(std::size_t i, std::size_t size, int cells) {
    double u = (static_cast<double>(i) + 0.5) / static_cast<double>(size) *
                   cells -
               0.5;
    u = std::clamp(u, 0.0, static_cast<double>(cells - 1));
    const int lo = static_cast<int>(std::floor(u));
    const int hi = std::min(lo + 1, cells - 1);
    return {lo, hi, u - lo};
  }

  const double* values_;
  int cells_a_;
  int cells_b_;
};

}  // namespace

AudioBuffer SyntheticGenerate(const AudioBuffer& lr, const LatentNoise& noise,
                              const SyntheticGenParams& params) {
  CheckAudio(lr);
  CheckParams(params, lr.sample_rate_hz);
  if (noise.dim() != static_cast<std::size_t>(params.noise_dim())) {
    throw DimensionError("noise dim " + std::to_string(noise.dim()) +
                         " does not match generator dim " +
                         std::to_string(params.noise_dim()));
  }

  ComplexSpectrogram spec = StftComplex(lr, params.stft);
  const std::size_t frames = spec.bins.rows();
  const std::size_t bins = spec.bins.cols();
  const double bin_hz =
      static_cast<double>(lr.sample_rate_hz) / params.stft.window_len;
  const auto cutoff_bin =
      static_cast<std::size_t>(std::floor(params.cutoff_hz / bin_hz));
  const std::size_t first_bin = cutoff_bin + 1;
  if (first_bin >= bins || cutoff_bin < 2) return lr;

  const std::size_t cells =
      static_cast<std::size_t>(params.time_cells) * params.freq_cells;
  const CoarseGrid envelope(noise.values.data(), params.time_cells,
                            params.freq_cells);
  const CoarseGrid phase(noise.values.data() + cells, params.time_cells,
                         params.freq_cells);

  // Octave fold: source bin and its octave factor for every replicated bin.
  const std::size_t band = bins - first_bin;
  std::vector<std::size_t> source(band);
  std::vector<double> octave_factor(band);
  std::vector<double> rolloff_gain(band);
  for (std::size_t j = 0; j < band; ++j) {
    const std::size_t k = first_bin + j;
    double factor = 1.0;
    double src = static_cast<double>(k);
    while (src * bin_hz > params.cutoff_hz) {
      src *= 0.5;
      factor *= 2.0;
    }
    source[j] = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::lround(src)), 1, cutoff_bin);
    octave_factor[j] = factor;
    const double hz = k * bin_hz;
    const double rolloff_db = params.base_rolloff_db_per_octave *
                              std::log2(hz / params.cutoff_hz);
    const double ramp = std::min(
        1.0, (hz - params.cutoff_hz) / (kFadeFraction * params.cutoff_hz));
    const double fade = std::pow(std::sin(0.5 * std::numbers::pi * ramp), 2);
    rolloff_gain[j] = fade * std::pow(10.0, rolloff_db / 20.0);
  }

  ComplexSpectrogram high = spec;
  for (std::size_t t = 0; t < frames; ++t) {
    const std::complex<double>* src_row = spec.bins.row(t);
    std::complex<double>* row = high.bins.row(t);
    std::fill(row, row + first_bin, std::complex<double>(0.0));
    for (std::size_t j = 0; j < band; ++j) {
      const std::complex<double> src = src_row[source[j]];
      const double gain =
          rolloff_gain[j] *
          std::exp(params.sigma * envelope.At(t, frames, j, band));
      const double angle = octave_factor[j] * std::arg(src) +
                           std::numbers::pi * phase.At(t, frames, j, band);
      row[first_bin + j] = std::polar(std::abs(src) * gain, angle);
    }
  }

  // Synthesized band: resynthesize, then remove whatever overlap-add leaked
  // below the cutoff with the complement of a zero-phase low-pass whose
  // passband ends at the cutoff.
  AudioBuffer synth = Istft(high, lr.size());
  const double nyquist = 0.5 * lr.sample_rate_hz;
  const double transition =
      std::min(kFadeFraction * params.cutoff_hz, 0.5 * (nyquist - params.cutoff_hz));
  const std::vector<double> split =
      DesignKaiserLowpass(params.cutoff_hz + transition, transition,
                          kBandSplitAttenuationDb, lr.sample_rate_hz);
  const AudioBuffer leaked = FilterZeroPhase(synth, split);

  AudioBuffer out = lr;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.samples[i] += synth.samples[i] - leaked.samples[i];
  }
  float peak = 0.0f;
  for (const float s : out.samples) peak = std::max(peak, std::abs(s));
  if (peak > 1.0f) {
    for (float& s : out.samples) s /= peak;
  }
  return out;
}

SyntheticGenerator::SyntheticGenerator(SyntheticGenParams params,
                                       int sample_rate_hz)
    : params_(params), sample_rate_hz_(sample_rate_hz) {
  CheckParams(params_, sample_rate_hz_);
}

GeneratorInfo SyntheticGenerator::Info() const {
  return {params_.noise_dim(), sample_rate_hz_, true};
}

AudioBuffer SyntheticGenerator::Generate(const AudioBuffer& lr,
                                         const LatentNoise& noise) const {
  if (lr.sample_rate_hz != sample_rate_hz_) {
    throw ParameterError("input sample rate differs from generator rate");
  }
  return SyntheticGenerate(lr, noise, params_);
}

}  // namespace srsearch
