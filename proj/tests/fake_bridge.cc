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

// A scripted bridge peer for protocol tests. Speaks the line protocol on
// stdin/stdout; behavior is selected with --mode.
//
//   normal       well-behaved peer
//   hang         never answers hello
//   version      rejects every hello with an error
//   malformed    answers generate with a line that is not JSON
//   die          exits when asked to generate

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>

#include "json.hpp"
#include "srsearch/audio_buffer.h"
#include "srsearch/bridge.h"
#include "srsearch/wav_io.h"

namespace {

using nlohmann::json;

constexpr int kNoiseDim = 16;
constexpr int kRate = 24000;

json Capabilities() {
  json verifiers = json::array();
  verifiers.push_back({{"name", "energy"},
                       {"direction", "higher_better"},
                       {"condition_kinds", {"none"}}});
  verifiers.push_back({{"name", "clap"},
                       {"direction", "higher_better"},
                       {"condition_kinds", {"reference_text"}}});
  verifiers.push_back({{"name", "wer"},
                       {"direction", "lower_better"},
                       {"condition_kinds", {"transcript"}}});
  for (const char* axis : {"ce", "cu", "pc", "pq"}) {
    verifiers.push_back({{"name", std::string("aes.") + axis},
                         {"direction", "higher_better"},
                         {"condition_kinds", {"none"}}});
  }
  return {{"noise_dim", kNoiseDim},
          {"sample_rate_hz", kRate},
          {"verifiers", verifiers}};
}

void Send(const std::string& op, const json& id, const json& payload) {
  std::cout << json{{"op", op}, {"id", id}, {"payload", payload}}.dump() << "\n"
            << std::flush;
}

void SendError(const json& id, const std::string& message) {
  Send("error", id, {{"message", message}});
}

double Mean(const srsearch::AudioBuffer& a) {
  double s = 0.0;
  for (float x : a.samples) s += x;
  return a.samples.empty() ? 0.0 : s / a.samples.size();
}

}  // namespace

int main(int argc, char** argv) {
  std::string mode = "normal";
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--mode") mode = argv[i + 1];
  }
  const json caps = Capabilities();
  int generated = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    const json msg = json::parse(line, nullptr, false);
    if (msg.is_discarded() || !msg.is_object()) return 1;
    const std::string op = msg.value("op", "");
    const json id = msg.value("id", json(0));
    const json payload = msg.value("payload", json::object());
    try {
      if (op == "hello") {
        if (mode == "hang") {
          std::this_thread::sleep_for(std::chrono::hours(1));
        }
        if (mode == "version" || payload.value("protocol_version", 0) != 1) {
          SendError(id, "unsupported protocol_version");
          continue;
        }
        Send("hello", id, caps);
      } else if (op == "generate") {
        if (mode == "malformed") {
          std::cout << "this is not json\n" << std::flush;
          continue;
        }
        if (mode == "die") return 7;
        const auto noise = payload.at("noise").get<std::vector<double>>();
        if (static_cast<int>(noise.size()) != kNoiseDim) {
          SendError(id, "noise length " + std::to_string(noise.size()) +
                            " != " + std::to_string(kNoiseDim));
          continue;
        }
        srsearch::AudioBuffer lr =
            srsearch::LoadWav(payload.at("lr_path").get<std::string>());
        // Output = input plus a small DC offset and tone driven by the noise.
        for (std::size_t t = 0; t < lr.samples.size(); ++t) {
          const double ph = 2.0 * M_PI * 6000.0 * t / lr.sample_rate_hz;
          lr.samples[t] += static_cast<float>(0.01 * noise[0] +
                                              0.01 * noise[1] * std::sin(ph));
        }
        const auto out = srsearch::TempWavPath("fake-bridge-gen" +
                                               std::to_string(generated++));
        srsearch::SaveWav(lr, out);
        Send("generate", id, {{"hr_path", out.string()}});
      } else if (op == "score") {
        const std::string name = payload.at("verifier").get<std::string>();
        const json* info = nullptr;
        for (const json& v : caps.at("verifiers")) {
          if (v.at("name") == name) info = &v;
        }
        if (info == nullptr) {
          SendError(id, "unknown verifier " + name);
          continue;
        }
        const json cond = payload.at("condition");
        const std::string kind = cond.at("kind").get<std::string>();
        bool declared = false;
        for (const json& k : info->at("condition_kinds")) declared |= k == kind;
        if (!declared) {
          SendError(id, "condition kind " + kind + " not accepted by " + name);
          continue;
        }
        const srsearch::AudioBuffer wav =
            srsearch::LoadWav(payload.at("wav_path").get<std::string>());
        const double mean = Mean(wav);
        double score = 0.0;
        if (name == "energy") {
          score = srsearch::Rms(wav);
        } else if (name == "clap") {
          score = mean * cond.at("payload").get<std::string>().size();
        } else if (name == "wer") {
          score = std::abs(mean);
        } else if (name == "aes.ce") {
          score = mean;
        } else if (name == "aes.cu") {
          score = -mean;
        } else if (name == "aes.pc") {
          score = srsearch::Rms(wav);
        } else {
          score = 2.0 * mean;
        }
        Send("score", id, {{"score", score}});
      } else if (op == "bye") {
        return 0;
      } else if (op == "error") {
        return 3;
      } else {
        SendError(id, "unknown op " + op);
      }
    } catch (const std::exception& e) {
      SendError(id, e.what());
    }
  }
  return 0;
}
