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

#ifndef SRSEARCH_WAV_IO_H_
#define SRSEARCH_WAV_IO_H_

#include <filesystem>

#include "srsearch/audio_buffer.h"

namespace srsearch {

enum class WavCodec { kPcm16, kFloat32 };

// Reads a RIFF/WAVE file holding PCM16 or IEEE float32 samples. Multichannel
// input is averaged to mono.
AudioBuffer LoadWav(const std::filesystem::path& path);

// PCM16 output clamps to [-1, 1) before quantizing with a 32768 scale.
void SaveWav(const AudioBuffer& buffer, const std::filesystem::path& path,
             WavCodec codec = WavCodec::kFloat32);

}  // namespace srsearch

#endif  // SRSEARCH_WAV_IO_H_
