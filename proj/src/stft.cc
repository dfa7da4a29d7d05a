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

#include "srsearch/stft.h"

#include <cmath>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "srsearch/errors.h"

namespace srsearch {
namespace {

// Eigen::FFT caches twiddle tables per instance and is not safe to share.
Eigen::FFT<double>& ThreadFft() {
  thread_local Eigen::FFT<double> fft = [] {
    Eigen::FFT<double> f;
    f.SetFlag(Eigen::FFT<double>::HalfSpectrum);
    return f;
  }();
  return fft;
}

}  // namespace

void CheckStftParams(const StftParams& params) {
  if (params.window_len <= 0 || params.window_len % 2 != 0) {
    throw ParameterError("window_len must be positive and even");
  }
  if (params.hop_len <= 0 || params.hop_len > params.window_len) {
    throw ParameterError("hop_len must be in (0, window_len]");
  }
}

std::size_t NumFrames(std::size_t num_samples, const StftParams& params) {
  return num_samples / static_cast<std::size_t>(params.hop_len) + 1;
}

std::vector<double> HannPeriodic(int length) {
  std::vector<double> w(length);
  for (int n = 0; n < length; ++n) {
    w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / length);
  }
  return w;
}

ComplexSpectrogram StftComplex(const AudioBuffer& buffer,
                               const StftParams& params) {
  CheckAudio(buffer);
  CheckStftParams(params);
  const std::size_t win = params.window_len;
  const std::size_t hop = params.hop_len;
  const std::size_t half = win / 2;
  const std::size_t frames = NumFrames(buffer.size(), params);
  const std::vector<double> window = HannPeriodic(params.window_len);

  ComplexSpectrogram out;
  out.params = params;
  out.sample_rate_hz = buffer.sample_rate_hz;
  out.bins = Grid<std::complex<double>>(frames, params.num_bins());

  auto& fft = ThreadFft();
  std::vector<double> frame(win);
  std::vector<std::complex<double>> spectrum;
  const auto n = static_cast<std::ptrdiff_t>(buffer.size());
  for (std::size_t t = 0; t < frames; ++t) {
    // Padded index t*hop + i maps to signal index t*hop + i - win/2.
    const auto start = static_cast<std::ptrdiff_t>(t * hop) -
                       static_cast<std::ptrdiff_t>(half);
    for (std::size_t i = 0; i < win; ++i) {
      const std::ptrdiff_t src = start + static_cast<std::ptrdiff_t>(i);
      frame[i] = (src >= 0 && src < n) ? buffer.samples[src] * window[i] : 0.0;
    }
    fft.fwd(spectrum, frame);
    std::copy(spectrum.begin(), spectrum.begin() + params.num_bins(),
              out.bins.row(t));
  }
  return out;
}

Spectrogram Stft(const AudioBuffer& buffer, const StftParams& params) {
  const ComplexSpectrogram c = StftComplex(buffer, params);
  Spectrogram out;
  out.params = params;
  out.sample_rate_hz = buffer.sample_rate_hz;
  out.mags = Grid<double>(c.bins.rows(), c.bins.cols());
  for (std::size_t i = 0; i < c.bins.size(); ++i) {
    out.mags.data()[i] = std::abs(c.bins.data()[i]);
  }
  return out;
}

AudioBuffer Istft(const ComplexSpectrogram& spec, std::size_t num_samples) {
  CheckStftParams(spec.params);
  if (spec.params.hop_len > spec.params.window_len / 2) {
    throw ParameterError("Istft requires hop_len <= window_len / 2");
  }
  if (spec.bins.cols() != static_cast<std::size_t>(spec.params.num_bins())) {
    throw DimensionError("spectrogram bin count does not match window_len");
  }
  if (spec.bins.rows() == 0) throw DimensionError("spectrogram has no frames");

  const std::size_t win = spec.params.window_len;
  const std::size_t hop = spec.params.hop_len;
  const std::size_t frames = spec.bins.rows();
  if (num_samples == 0) num_samples = (frames - 1) * hop;
  const std::vector<double> window = HannPeriodic(spec.params.window_len);

  const std::size_t padded_len = (frames - 1) * hop + win;
  std::vector<double> acc(padded_len, 0.0);
  std::vector<double> norm(padded_len, 0.0);

  auto& fft = ThreadFft();
  std::vector<std::complex<double>> spectrum(spec.bins.cols());
  std::vector<double> frame;
  for (std::size_t t = 0; t < frames; ++t) {
    std::copy(spec.bins.row(t), spec.bins.row(t) + spec.bins.cols(),
              spectrum.begin());
    fft.inv(frame, spectrum, static_cast<Eigen::Index>(win));
    for (std::size_t i = 0; i < win; ++i) {
      acc[t * hop + i] += frame[i] * window[i];
      norm[t * hop + i] += window[i] * window[i];
    }
  }

  AudioBuffer out;
  out.sample_rate_hz = spec.sample_rate_hz;
  out.samples.assign(num_samples, 0.0f);
  const std::size_t half = win / 2;
  for (std::size_t n = 0; n < num_samples; ++n) {
    const std::size_t p = n + half;
    if (p < padded_len && norm[p] > 1e-10) {
      out.samples[n] = static_cast<float>(acc[p] / norm[p]);
    }
  }
  return out;
}

AudioBuffer Istft(const Spectrogram& spec, const Grid<double>& phases,
                  std::size_t num_samples) {
  if (!spec.mags.SameShape(phases)) {
    throw DimensionError("magnitude and phase grids differ in shape");
  }
  ComplexSpectrogram c;
  c.params = spec.params;
  c.sample_rate_hz = spec.sample_rate_hz;
  c.bins = Grid<std::complex<double>>(spec.mags.rows(), spec.mags.cols());
  for (std::size_t i = 0; i < c.bins.size(); ++i) {
    c.bins.data()[i] = std::polar(spec.mags.data()[i], phases.data()[i]);
  }
  return Istft(c, num_samples);
}

}  // namespace srsearch
