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

#ifndef SRSEARCH_STFT_H_
#define SRSEARCH_STFT_H_

#include <complex>
#include <cstddef>

#include "srsearch/audio_buffer.h"
#include "srsearch/grid.h"

namespace srsearch {

enum class WindowKind { kHannPeriodic };

struct StftParams {
  int window_len = 2048;
  int hop_len = 512;
  WindowKind window_kind = WindowKind::kHannPeriodic;

  int num_bins() const { return window_len / 2 + 1; }
  bool operator==(const StftParams&) const = default;
};

// Throws ParameterError unless 0 < hop_len <= window_len and window_len is
// even.
void CheckStftParams(const StftParams& params);

// Number of center-aligned frames for a signal of `num_samples`.
std::size_t NumFrames(std::size_t num_samples, const StftParams& params);

// Linear-magnitude spectrogram, T frames by window_len/2 + 1 bins.
struct Spectrogram {
  Grid<double> mags;
  StftParams params;
  int sample_rate_hz = 0;

  std::size_t num_frames() const { return mags.rows(); }
  std::size_t num_bins() const { return mags.cols(); }
  double BinHz(std::size_t bin) const {
    return static_cast<double>(bin) * sample_rate_hz / params.window_len;
  }
};

struct ComplexSpectrogram {
  Grid<std::complex<double>> bins;
  StftParams params;
  int sample_rate_hz = 0;
};

std::vector<double> HannPeriodic(int length);

// Frames are centered: the signal is zero-padded by window_len/2 on both
// sides and frame t starts at t * hop_len in the padded signal.
ComplexSpectrogram StftComplex(const AudioBuffer& buffer,
                               const StftParams& params);
Spectrogram Stft(const AudioBuffer& buffer, const StftParams& params);

// Weighted overlap-add inverse of StftComplex, normalized by the summed
// squared window. Requires hop_len <= window_len / 2. `num_samples` of zero
// selects (T - 1) * hop_len.
AudioBuffer Istft(const Spectrogram& spec, const Grid<double>& phases,
                  std::size_t num_samples = 0);
AudioBuffer Istft(const ComplexSpectrogram& spec, std::size_t num_samples = 0);

}  // namespace srsearch

#endif  // SRSEARCH_STFT_H_
