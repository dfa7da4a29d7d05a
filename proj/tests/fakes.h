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

#ifndef SRSEARCH_TESTS_FAKES_H_
#define SRSEARCH_TESTS_FAKES_H_

#include <cmath>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <vector>

#include "srsearch/generator.h"
#include "srsearch/random.h"
#include "srsearch/verifier.h"

namespace srsearch::testing {

// Writes the noise vector itself as the waveform, scaled into [-1, 1].
class EchoGenerator : public Generator {
 public:
  explicit EchoGenerator(int dim, int rate = 16000) : dim_(dim), rate_(rate) {}
  GeneratorInfo Info() const override { return {dim_, rate_, true}; }
  AudioBuffer Generate(const AudioBuffer&, const LatentNoise& noise) const override {
    if (static_cast<int>(noise.dim()) != dim_) {
      throw std::runtime_error("echo generator: wrong noise dim");
    }
    AudioBuffer out;
    out.sample_rate_hz = rate_;
    for (double v : noise.values) {
      out.samples.push_back(static_cast<float>(std::tanh(v / 4.0)));
    }
    return out;
  }

 private:
  int dim_;
  int rate_;
};

// Throws for one specific noise vector.
class FailingGenerator : public Generator {
 public:
  FailingGenerator(int dim, LatentNoise poison) : echo_(dim), poison_(std::move(poison)) {}
  GeneratorInfo Info() const override { return echo_.Info(); }
  AudioBuffer Generate(const AudioBuffer& lr, const LatentNoise& noise) const override {
    if (noise == poison_) throw std::runtime_error("synthetic failure");
    return echo_.Generate(lr, noise);
  }

 private:
  EchoGenerator echo_;
  LatentNoise poison_;
};

// Deterministic pseudo-random score in [0, 1) derived from the waveform bytes.
inline double ScriptedScore(const AudioBuffer& audio) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (float v : audio.samples) {
    unsigned char bytes[sizeof(float)];
    std::memcpy(bytes, &v, sizeof(float));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  return (SplitMix64(h) >> 11) * 0x1.0p-53;
}

inline std::shared_ptr<const Verifier> ScriptedVerifier(
    const std::string& name = "scripted",
    Direction direction = Direction::kHigherBetter) {
  return std::make_shared<FunctionVerifier>(name, direction, ScriptedScore);
}

// Negative distance of the waveform to a fixed target: a smooth objective.
inline std::shared_ptr<const Verifier> TargetVerifier(std::vector<float> target) {
  return std::make_shared<FunctionVerifier>(
      "target", Direction::kHigherBetter,
      [target = std::move(target)](const AudioBuffer& a) {
        double d = 0.0;
        for (std::size_t i = 0; i < target.size(); ++i) {
          const double e = a.samples[i] - target[i];
          d += e * e;
        }
        return -std::sqrt(d);
      });
}

}  // namespace srsearch::testing

#endif  // SRSEARCH_TESTS_FAKES_H_
