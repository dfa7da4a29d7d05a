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

#ifndef SRSEARCH_TESTS_TEST_UTIL_H_
#define SRSEARCH_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>

#include "srsearch/audio_buffer.h"
#include "srsearch/random.h"

namespace srsearch::testing {

inline AudioBuffer Sine(double hz, int rate, double seconds, double amp = 0.5) {
  AudioBuffer b;
  b.sample_rate_hz = rate;
  b.samples.resize(static_cast<std::size_t>(std::lround(seconds * rate)));
  for (std::size_t i = 0; i < b.samples.size(); ++i) {
    b.samples[i] = static_cast<float>(amp * std::sin(2.0 * M_PI * hz * i / rate));
  }
  return b;
}

// Uniform in [-scale, scale) from a splitmix64 stream.
inline AudioBuffer UniformNoise(std::uint64_t seed, std::size_t n,
                                double scale = 1.0, int rate = 24000) {
  SplitMix64Stream stream(seed);
  AudioBuffer b;
  b.sample_rate_hz = rate;
  b.samples.resize(n);
  for (float& x : b.samples) {
    x = static_cast<float>(scale * (2.0 * stream.NextUnit() - 1.0));
  }
  return b;
}

inline AudioBuffer Scaled(AudioBuffer b, double c) {
  for (float& x : b.samples) x = static_cast<float>(c * x);
  return b;
}

// Removed with its contents on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("srsearch-test-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace srsearch::testing

#endif  // SRSEARCH_TESTS_TEST_UTIL_H_
