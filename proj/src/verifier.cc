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

#include "srsearch/verifier.h"

#include "srsearch/lsd.h"

namespace srsearch {

Score OracleLsdScore(const AudioBuffer& candidate, const AudioBuffer& reference,
                     const StftParams& params) {
  return {Lsd(candidate, reference, params), Direction::kLowerBetter};
}

OracleLsdVerifier::OracleLsdVerifier(std::string name, AudioBuffer reference,
                                     StftParams params)
    : name_(std::move(name)),
      reference_(std::move(reference)),
      params_(params),
      reference_spec_(Stft(reference_, params_)) {}

Score OracleLsdVerifier::Evaluate(const AudioBuffer& candidate) const {
  // The cached reference analysis is only valid when no truncation happens.
  if (candidate.size() == reference_.size() &&
      candidate.sample_rate_hz == reference_.sample_rate_hz) {
    return {SpectrogramLsd(reference_spec_.mags, Stft(candidate, params_).mags),
            Direction::kLowerBetter};
  }
  return OracleLsdScore(candidate, reference_, params_);
}

}  // namespace srsearch
