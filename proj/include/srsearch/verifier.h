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

#ifndef SRSEARCH_VERIFIER_H_
#define SRSEARCH_VERIFIER_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "srsearch/audio_buffer.h"
#include "srsearch/score.h"
#include "srsearch/stft.h"

namespace srsearch {

// Maps a candidate waveform (plus whatever condition the implementation was
// built with) to a scalar score. Evaluate must be callable from several
// threads at once.
class Verifier {
 public:
  virtual ~Verifier() = default;

  virtual const std::string& name() const = 0;
  virtual Direction direction() const = 0;
  virtual Score Evaluate(const AudioBuffer& candidate) const = 0;
};

// LSD against the ground-truth reference; lower is better.
Score OracleLsdScore(const AudioBuffer& candidate, const AudioBuffer& reference,
                     const StftParams& params = {});

class OracleLsdVerifier : public Verifier {
 public:
  OracleLsdVerifier(std::string name, AudioBuffer reference,
                    StftParams params = {});

  const std::string& name() const override { return name_; }
  Direction direction() const override { return Direction::kLowerBetter; }
  Score Evaluate(const AudioBuffer& candidate) const override;

 private:
  std::string name_;
  AudioBuffer reference_;
  StftParams params_;
  Spectrogram reference_spec_;
};

// Wraps a plain function. Used for scripted verifiers in tests and tools.
class FunctionVerifier : public Verifier {
 public:
  using Fn = std::function<double(const AudioBuffer&)>;

  FunctionVerifier(std::string name, Direction direction, Fn fn)
      : name_(std::move(name)), direction_(direction), fn_(std::move(fn)) {}

  const std::string& name() const override { return name_; }
  Direction direction() const override { return direction_; }
  Score Evaluate(const AudioBuffer& candidate) const override {
    return {fn_(candidate), direction_};
  }

 private:
  std::string name_;
  Direction direction_;
  Fn fn_;
};

}  // namespace srsearch

#endif  // SRSEARCH_VERIFIER_H_
