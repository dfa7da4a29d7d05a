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

#include "srsearch/lowpass.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "srsearch/errors.h"

namespace srsearch {
namespace {

constexpr double kAttenuationDb = 60.0;
constexpr double kTransitionFraction = 0.1;
constexpr int kPredictorOrder = 64;
constexpr std::size_t kPredictorSpan = 4096;

// Burg estimate of the forward prediction polynomial a (a[0] = 1) for x, so
// that x[n] is predicted by -sum_{i>=1} a[i] x[n-i].
std::vector<double> BurgPredictor(const std::vector<double>& x, int order) {
  const std::size_t n = x.size();
  std::vector<double> f = x;
  std::vector<double> b = x;
  std::vector<double> a{1.0};
  for (int m = 1; m <= order; ++m) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = m; i < n; ++i) {
      num += f[i] * b[i - 1];
      den += f[i] * f[i] + b[i - 1] * b[i - 1];
    }
    if (den <= 0.0) break;
    const double k = -2.0 * num / den;
    a.push_back(0.0);
    const std::vector<double> prev = a;
    for (int i = 1; i <= m; ++i) a[i] = prev[i] + k * prev[m - i];
    for (std::size_t i = n - 1; i >= static_cast<std::size_t>(m); --i) {
      const double fi = f[i];
      f[i] = fi + k * b[i - 1];
      b[i] = b[i - 1] + k * fi;
    }
  }
  return a;
}

// Continues `history` (oldest first) by `count` predicted samples.
std::vector<double> Extrapolate(std::vector<double> history, std::size_t count) {
  const int order = std::min<int>(kPredictorOrder,
                                  static_cast<int>(history.size() / 4));
  std::vector<double> out;
  out.reserve(count);
  if (order < 2) {
    out.assign(count, history.back());
    return out;
  }
  if (history.size() > kPredictorSpan) {
    history.erase(history.begin(), history.end() - kPredictorSpan);
  }
  const std::vector<double> a = BurgPredictor(history, order);
  const int p = static_cast<int>(a.size()) - 1;
  for (std::size_t j = 0; j < count; ++j) {
    double y = 0.0;
    const std::size_t end = history.size();
    for (int i = 1; i <= p; ++i) y -= a[i] * history[end - i];
    history.push_back(y);
    out.push_back(y);
  }
  return out;
}

// Centered ("same") convolution with an odd-length symmetric kernel.
std::vector<double> ConvolveSame(const std::vector<double>& x,
                                 const std::vector<double>& h) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const auto taps = static_cast<std::ptrdiff_t>(h.size());
  const std::ptrdiff_t center = taps / 2;
  std::vector<double> y(x.size(), 0.0);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t k_lo = std::max<std::ptrdiff_t>(0, i + center - n + 1);
    const std::ptrdiff_t k_hi = std::min<std::ptrdiff_t>(taps, i + center + 1);
    double acc = 0.0;
    for (std::ptrdiff_t k = k_lo; k < k_hi; ++k) {
      acc += h[k] * x[i + center - k];
    }
    y[i] = acc;
  }
  return y;
}

}  // namespace

std::vector<double> DesignKaiserLowpass(double stop_hz, double transition_hz,
                                        double attenuation_db,
                                        int sample_rate_hz) {
  const double fs = sample_rate_hz;
  const double delta_omega = 2.0 * std::numbers::pi * transition_hz / fs;
  int taps = static_cast<int>(
                 std::ceil((attenuation_db - 7.95) / (2.285 * delta_omega))) +
             1;
  if (taps % 2 == 0) ++taps;

  double beta = 0.0;
  if (attenuation_db > 50.0) {
    beta = 0.1102 * (attenuation_db - 8.7);
  } else if (attenuation_db >= 21.0) {
    beta = 0.5842 * std::pow(attenuation_db - 21.0, 0.4) +
           0.07886 * (attenuation_db - 21.0);
  }

  const double fc = (stop_hz - 0.5 * transition_hz) / fs;
  const int m = taps / 2;
  const double i0_beta = std::cyl_bessel_i(0.0, beta);
  std::vector<double> h(taps);
  double sum = 0.0;
  for (int n = 0; n < taps; ++n) {
    const int k = n - m;
    const double sinc = k == 0 ? 2.0 * fc
                               : std::sin(2.0 * std::numbers::pi * fc * k) /
                                     (std::numbers::pi * k);
    const double r = static_cast<double>(k) / m;
    const double w = std::cyl_bessel_i(0.0, beta * std::sqrt(1.0 - r * r)) /
                     i0_beta;
    h[n] = sinc * w;
    sum += h[n];
  }
  for (double& v : h) v /= sum;  // unity DC gain
  return h;
}

AudioBuffer MakeLowres(const AudioBuffer& hr, double cutoff_hz) {
  CheckAudio(hr);
  const double nyquist = 0.5 * hr.sample_rate_hz;
  if (!(cutoff_hz > 0.0) || cutoff_hz >= nyquist) {
    throw ParameterError("cutoff must lie in (0, Nyquist)");
  }
  const std::vector<double> h =
      DesignKaiserLowpass(cutoff_hz, kTransitionFraction * cutoff_hz,
                          kAttenuationDb, hr.sample_rate_hz);

  return FilterZeroPhase(hr, h);
}

AudioBuffer FilterZeroPhase(const AudioBuffer& x_in, const std::vector<double>& h) {
  CheckAudio(x_in);
  // Both ends are extended by linear prediction so the filter sees a smooth
  // continuation instead of an edge.
  const std::size_t len = x_in.size();
  const std::size_t pad = 2 * h.size();
  const std::vector<double> x(x_in.samples.begin(), x_in.samples.end());
  const std::vector<double> tail = Extrapolate(x, pad);
  const std::vector<double> head =
      Extrapolate(std::vector<double>(x.rbegin(), x.rend()), pad);
  std::vector<double> ext(len + 2 * pad);
  for (std::size_t i = 0; i < pad; ++i) {
    ext[pad - 1 - i] = head[i];
    ext[pad + len + i] = tail[i];
  }
  std::copy(x.begin(), x.end(), ext.begin() + pad);

  // The kernel is symmetric, so the backward pass is the same centered
  // convolution as the forward one.
  const std::vector<double> once = ConvolveSame(ext, h);
  const std::vector<double> twice = ConvolveSame(once, h);

  AudioBuffer out;
  out.sample_rate_hz = x_in.sample_rate_hz;
  out.samples.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.samples[i] = static_cast<float>(twice[pad + i]);
  }
  return out;
}

}  // namespace srsearch
