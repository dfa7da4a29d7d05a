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

#include "srsearch/corpus.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "srsearch/errors.h"
#include "srsearch/lowpass.h"
#include "srsearch/random.h"

namespace srsearch {
namespace {

constexpr double kNoiseRelativeDb = -20.0;
constexpr double kPeak = 0.5;

double RmsOf(const std::vector<double>& x) {
  double acc = 0.0;
  for (const double v : x) acc += v * v;
  return std::sqrt(acc / x.size());
}

// White noise restricted to (low_hz, Nyquist) with a brick-wall FFT mask.
std::vector<double> HighBandNoise(std::size_t len, int rate, double low_hz,
                                  std::uint64_t seed) {
  const LatentNoise white = SampleStandardNoise(len, seed);
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, white.values);
  const double bin_hz = static_cast<double>(rate) / len;
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t folded = std::min(k, len - k);
    if (folded * bin_hz <= low_hz) spectrum[k] = 0.0;
  }
  std::vector<std::complex<double>> time;
  fft.inv(time, spectrum);
  std::vector<double> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = time[i].real();
  return out;
}

}  // namespace

std::vector<CorpusItem> MakeTestCorpus(int count, std::uint64_t seed,
                                       int sample_rate_hz, double duration_s,
                                       double cutoff_hz) {
  if (count < 1) throw ParameterError("corpus count must be >= 1");
  if (sample_rate_hz <= 0) throw ParameterError("sample rate must be > 0");
  if (!(duration_s > 0.0)) throw ParameterError("duration must be > 0");
  if (!(cutoff_hz > 0.0) || cutoff_hz >= 0.5 * sample_rate_hz) {
    throw ParameterError("cutoff must lie in (0, Nyquist)");
  }
  const auto len = static_cast<std::size_t>(
      std::llround(duration_s * sample_rate_hz));
  if (len < 2) throw ParameterError("corpus items need at least 2 samples");
  const double nyquist = 0.5 * sample_rate_hz;

  std::vector<CorpusItem> corpus;
  corpus.reserve(count);
  for (int item = 0; item < count; ++item) {
    const std::uint64_t item_seed = DeriveSeed(seed, item);
    SplitMix64Stream stream(item_seed);
    const double f0 = 110.0 + 330.0 * stream.NextUnit();
    const int harmonics = 8 + static_cast<int>(stream.NextUnit() * 9.0);

    std::vector<double> tone(len, 0.0);
    for (int k = 1; k <= harmonics; ++k) {
      const double freq = f0 * k;
      const double phase = 2.0 * std::numbers::pi * stream.NextUnit();
      if (freq >= nyquist) continue;
      const double omega = 2.0 * std::numbers::pi * freq / sample_rate_hz;
      for (std::size_t n = 0; n < len; ++n) {
        tone[n] += std::sin(omega * n + phase) / k;
      }
    }

    std::vector<double> noise = HighBandNoise(len, sample_rate_hz, cutoff_hz,
                                              SplitMix64(item_seed));
    const double noise_scale = RmsOf(tone) *
                               std::pow(10.0, kNoiseRelativeDb / 20.0) /
                               RmsOf(noise);
    double peak = 0.0;
    for (std::size_t n = 0; n < len; ++n) {
      tone[n] += noise_scale * noise[n];
      peak = std::max(peak, std::abs(tone[n]));
    }

    CorpusItem out;
    out.f0_hz = f0;
    out.harmonics = harmonics;
    out.hr.sample_rate_hz = sample_rate_hz;
    out.hr.samples.resize(len);
    for (std::size_t n = 0; n < len; ++n) {
      out.hr.samples[n] = static_cast<float>(tone[n] * kPeak / peak);
    }
    out.lr = MakeLowres(out.hr, cutoff_hz);
    corpus.push_back(std::move(out));
  }
  return corpus;
}

}  // namespace srsearch
