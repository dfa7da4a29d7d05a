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

#ifndef SRSEARCH_SYNTHETIC_GENERATOR_H_
#define SRSEARCH_SYNTHETIC_GENERATOR_H_

#include "srsearch/generator.h"
#include "srsearch/stft.h"

namespace srsearch {

struct SyntheticGenParams {
  double cutoff_hz = 4000.0;
  int time_cells = 8;
  int freq_cells = 8;
  // Scale of the log-envelope noise; zero disables envelope randomness.
  double sigma = 0.5;
  double base_rolloff_db_per_octave = -3.0;
  StftParams stft;

  // Envelope half followed by phase half.
  int noise_dim() const { return time_cells * freq_cells * 2; }
};

// Spectral band replication driven by latent noise:
//  * bins above the cutoff copy the magnitude of the bin one or more octaves
//    below, landing in (cutoff/2, cutoff];
//  * the copied band is shaped by a rolloff and by exp(sigma * z_env), with
//    z_env bilinearly interpolated from the coarse envelope grid;
//  * its phase is the octave-scaled source phase offset by pi * z_phase,
//    interpolated the same way from the phase half of the noise;
//  * bins at or below the cutoff keep the input's magnitude and phase.
// The result is peak-normalized only if it would exceed full scale.
AudioBuffer SyntheticGenerate(const AudioBuffer& lr, const LatentNoise& noise,
                              const SyntheticGenParams& params);

class SyntheticGenerator : public Generator {
 public:
  SyntheticGenerator(SyntheticGenParams params, int sample_rate_hz);

  GeneratorInfo Info() const override;
  AudioBuffer Generate(const AudioBuffer& lr,
                       const LatentNoise& noise) const override;

  const SyntheticGenParams& params() const { return params_; }

 private:
  SyntheticGenParams params_;
  int sample_rate_hz_;
};

}  // namespace srsearch

#endif  // SRSEARCH_SYNTHETIC_GENERATOR_H_
