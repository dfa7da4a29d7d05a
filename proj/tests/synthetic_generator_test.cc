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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "srsearch/corpus.h"
#include "srsearch/errors.h"
#include "srsearch/lsd.h"
#include "srsearch/random.h"

namespace srsearch {
namespace {

const std::vector<CorpusItem>& Corpus() {
  static const std::vector<CorpusItem> corpus =
      MakeTestCorpus(8, 0, 24000, 1.0, 4000.0);
  return corpus;
}

// Pairwise full-band LSD between 16 draws, averaged over pairs and over the
// eight corpus items, measured at 0.535; the bound keeps a 20% margin.
constexpr double kCoverageBound = 0.43;

TEST(SyntheticGenerator, DeclaresNoiseDim) {
  SyntheticGenParams p;
  EXPECT_EQ(p.noise_dim(), 128);
  const SyntheticGenerator g(p, 24000);
  EXPECT_EQ(g.Info().noise_dim, 128);
  EXPECT_EQ(g.Info().output_sample_rate_hz, 24000);
  EXPECT_TRUE(g.Info().deterministic);
  p.time_cells = 4;
  p.freq_cells = 3;
  EXPECT_EQ(p.noise_dim(), 24);
}

TEST(SyntheticGenerator, RejectsBadInputs) {
  SyntheticGenParams p;
  const AudioBuffer& lr = Corpus()[0].lr;
  EXPECT_THROW(SyntheticGenerate(lr, SampleStandardNoise(127, 1), p),
               DimensionError);
  p.cutoff_hz = 12000.0;
  EXPECT_THROW(SyntheticGenerator(p, 24000), ParameterError);
  p.cutoff_hz = 4000.0;
  p.sigma = -1.0;
  EXPECT_THROW(SyntheticGenerator(p, 24000), ParameterError);
  const SyntheticGenerator g({}, 16000);
  EXPECT_THROW(g.Generate(lr, SampleStandardNoise(128, 1)), ParameterError);
}

TEST(SyntheticGenerator, Deterministic) {
  const AudioBuffer& lr = Corpus()[2].lr;
  const LatentNoise z = SampleStandardNoise(128, 9);
  EXPECT_EQ(SyntheticGenerate(lr, z, {}), SyntheticGenerate(lr, z, {}));
}

TEST(SyntheticGenerator, OutputLengthAndRate) {
  AudioBuffer lr = Corpus()[1].lr;
  lr.samples.resize(10001);
  const AudioBuffer out = SyntheticGenerate(lr, SampleStandardNoise(128, 2), {});
  EXPECT_EQ(out.size(), 10001u);
  EXPECT_EQ(out.sample_rate_hz, 24000);
}

TEST(SyntheticGenerator, SigmaZeroIgnoresEnvelopeHalf) {
  SyntheticGenParams p;
  p.sigma = 0.0;
  const AudioBuffer& lr = Corpus()[3].lr;
  LatentNoise a = SampleStandardNoise(128, 1);
  LatentNoise b = SampleStandardNoise(128, 2);
  for (int i = 64; i < 128; ++i) b.values[i] = a.values[i];
  EXPECT_EQ(SyntheticGenerate(lr, a, p), SyntheticGenerate(lr, b, p));
  // With sigma > 0 the same pair differs.
  EXPECT_NE(SyntheticGenerate(lr, a, {}), SyntheticGenerate(lr, b, {}));
}

TEST(SyntheticGenerator, ZeroInputGivesZeroOutput) {
  const AudioBuffer zero{std::vector<float>(12000, 0.0f), 24000};
  const AudioBuffer out = SyntheticGenerate(zero, SampleStandardNoise(128, 3), {});
  for (float v : out.samples) ASSERT_EQ(v, 0.0f);
}

TEST(SyntheticGenerator, PreservesInputBand) {
  SyntheticGenParams p;
  const std::size_t cutoff_bin =
      static_cast<std::size_t>(p.cutoff_hz * p.stft.window_len / 24000.0);
  for (std::size_t i = 0; i < Corpus().size(); ++i) {
    const AudioBuffer& lr = Corpus()[i].lr;
    for (std::uint64_t seed : {1u, 2u}) {
      const AudioBuffer out = SyntheticGenerate(lr, SampleStandardNoise(128, seed), p);
      const double band = SpectrogramLsd(Stft(out, p.stft).mags,
                                         Stft(lr, p.stft).mags, 0, cutoff_bin + 1);
      EXPECT_LE(band, 0.05) << "item " << i;
    }
  }
}

TEST(SyntheticGenerator, AddsHighBandEnergy) {
  const AudioBuffer& lr = Corpus()[0].lr;
  const Spectrogram in = Stft(lr, {});
  const Spectrogram out = Stft(SyntheticGenerate(lr, SampleStandardNoise(128, 5), {}), {});
  double e_in = 0.0;
  double e_out = 0.0;
  for (std::size_t t = 0; t < in.num_frames(); ++t) {
    for (std::size_t f = 450; f < in.num_bins(); ++f) {
      e_in += in.mags(t, f) * in.mags(t, f);
      e_out += out.mags(t, f) * out.mags(t, f);
    }
  }
  EXPECT_GT(e_out, 1e3 * e_in);
}

TEST(SyntheticGenerator, Continuity) {
  // Perturbations of relative size 0.15 move the output by a bounded LSD.
  for (std::size_t i = 0; i < Corpus().size(); ++i) {
    const AudioBuffer& lr = Corpus()[i].lr;
    for (std::uint64_t s = 0; s < 3; ++s) {
      const LatentNoise z = SampleStandardNoise(128, DeriveSeed(100 + i, s));
      const LatentNoise d = SampleStandardNoise(128, DeriveSeed(200 + i, s));
      double nz = 0.0;
      double nd = 0.0;
      for (int k = 0; k < 128; ++k) {
        nz += z.values[k] * z.values[k];
        nd += d.values[k] * d.values[k];
      }
      LatentNoise z2 = z;
      for (int k = 0; k < 128; ++k) {
        z2.values[k] += 0.15 * std::sqrt(nz / nd) * d.values[k];
      }
      EXPECT_LE(Lsd(SyntheticGenerate(lr, z, {}), SyntheticGenerate(lr, z2, {})), 0.6)
          << "item " << i << " draw " << s;
    }
  }
}

TEST(SyntheticGenerator, StochasticCoverage) {
  double total = 0.0;
  for (std::size_t i = 0; i < Corpus().size(); ++i) {
    std::vector<AudioBuffer> outs;
    for (int k = 0; k < 16; ++k) {
      outs.push_back(SyntheticGenerate(Corpus()[i].lr,
                                       SampleStandardNoise(128, DeriveSeed(i, k)), {}));
    }
    double sum = 0.0;
    int pairs = 0;
    for (int a = 0; a < 16; ++a) {
      for (int b = a + 1; b < 16; ++b) {
        sum += Lsd(outs[a], outs[b]);
        ++pairs;
      }
    }
    EXPECT_GT(sum / pairs, 0.0) << "item " << i;
    total += sum / pairs;
  }
  const double mean = total / Corpus().size();
  EXPECT_GT(mean, 0.1);
  EXPECT_GT(mean, kCoverageBound);
}

TEST(SyntheticGenerator, PeakNormalizesOnlyAboveFullScale) {
  AudioBuffer loud = Corpus()[4].hr;
  for (float& v : loud.samples) v *= 1.9f;
  const AudioBuffer out = SyntheticGenerate(loud, SampleStandardNoise(128, 1), {});
  float peak = 0.0f;
  for (float v : out.samples) peak = std::max(peak, std::abs(v));
  EXPECT_LE(peak, 1.0f);
}

}  // namespace
}  // namespace srsearch
