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

#include "srsearch/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "srsearch/errors.h"
#include "srsearch/lsd.h"

namespace srsearch {

void CheckCandidateSet(const CandidateSet& set, std::size_t min_size) {
  if (set.size() < min_size) {
    throw ParameterError("candidate set needs at least " +
                         std::to_string(min_size) + " members");
  }
  if (set.size() == 0) return;
  const Spectrogram& first = set.spectrograms.front();
  for (const Spectrogram& s : set.spectrograms) {
    if (!s.mags.SameShape(first.mags) || !(s.params == first.params)) {
      throw DimensionError("candidate spectrograms differ in shape");
    }
  }
}

Grid<double> MeanSpectrogram(const CandidateSet& set) {
  CheckCandidateSet(set, 1);
  const Grid<double>& first = set.spectrograms.front().mags;
  // Offsets from the first member.
  Grid<double> delta(first.rows(), first.cols(), 0.0);
  for (const Spectrogram& s : set.spectrograms) {
    for (std::size_t i = 0; i < delta.size(); ++i) {
      delta.data()[i] += s.mags.data()[i] - first.data()[i];
    }
  }
  const double n = static_cast<double>(set.size());
  Grid<double> mean = first;
  for (std::size_t i = 0; i < mean.size(); ++i) mean.data()[i] += delta.data()[i] / n;
  return mean;
}

double SearchSpaceVariance(const CandidateSet& set) {
  CheckCandidateSet(set);
  const Grid<double> mean = MeanSpectrogram(set);
  double total = 0.0;
  for (const Spectrogram& s : set.spectrograms) {
    total += SpectrogramLsd(s.mags, mean);
  }
  return total / static_cast<double>(set.size());
}

UncertaintyMap ComputeUncertaintyMap(const CandidateSet& set, double epsilon,
                                     VarianceDomain domain) {
  CheckCandidateSet(set);
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be > 0");
  const Grid<double>& first = set.spectrograms.front().mags;
  const double n = static_cast<double>(set.size());

  auto value = [domain](double mag) {
    return domain == VarianceDomain::kLinear
               ? mag
               : std::log10(mag * mag + kLsdEpsilon);
  };

  Grid<double> var(first.rows(), first.cols(), 0.0);
  for (std::size_t i = 0; i < var.size(); ++i) {
    const double base = value(first.data()[i]);
    double sum = 0.0;
    for (const Spectrogram& s : set.spectrograms) sum += value(s.mags.data()[i]) - base;
    const double mean = sum / n;
    double acc = 0.0;
    for (const Spectrogram& s : set.spectrograms) {
      const double d = value(s.mags.data()[i]) - base - mean;
      acc += d * d;
    }
    var.data()[i] = acc / n;
  }

  const auto [lo_it, hi_it] = std::minmax_element(var.data().begin(),
                                                   var.data().end());
  const double lo = *lo_it;
  const double scale = *hi_it - lo + epsilon;
  UncertaintyMap map;
  map.epsilon = epsilon;
  map.values = std::move(var);
  for (double& v : map.values.data()) v = std::clamp((v - lo) / scale, 0.0, 1.0);
  return map;
}

UncertaintyMap ClipForRender(const UncertaintyMap& map, double percentile) {
  if (!(percentile > 0.0 && percentile <= 100.0)) {
    throw ParameterError("percentile must lie in (0, 100]");
  }
  UncertaintyMap out = map;
  out.clip_percentile = percentile;
  if (out.values.empty()) return out;

  std::vector<double> sorted = map.values.data();
  std::sort(sorted.begin(), sorted.end());
  const auto count = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(percentile / 100.0 * count));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  const double threshold = sorted[rank - 1];

  double peak = 0.0;
  for (double& v : out.values.data()) {
    v = std::min(v, threshold);
    peak = std::max(peak, v);
  }
  if (peak > 0.0) {
    for (double& v : out.values.data()) v /= peak;
  } else {
    std::fill(out.values.data().begin(), out.values.data().end(), 0.0);
  }
  return out;
}

void ExportMap(const UncertaintyMap& map, const std::filesystem::path& path,
               MapFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  const Grid<double>& u = map.values;
  if (format == MapFormat::kPgm) {
    out << "P5\n" << u.rows() << ' ' << u.cols() << "\n255\n";
    for (std::size_t f = u.cols(); f-- > 0;) {
      for (std::size_t t = 0; t < u.rows(); ++t) {
        const double v = std::clamp(u(t, f), 0.0, 1.0);
        out.put(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * v))));
      }
    }
  } else {
    char line[96];
    std::snprintf(line, sizeof(line), "# epsilon=%g,clip_percentile=%g\n",
                  map.epsilon, map.clip_percentile);
    out << line << "t,f,u\n";
    for (std::size_t t = 0; t < u.rows(); ++t) {
      for (std::size_t f = 0; f < u.cols(); ++f) {
        std::snprintf(line, sizeof(line), "%zu,%zu,%.6f\n", t, f, u(t, f));
        out << line;
      }
    }
  }
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace srsearch
