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

#ifndef SRSEARCH_BRIDGE_H_
#define SRSEARCH_BRIDGE_H_

#include <sys/types.h>

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "srsearch/generator.h"
#include "srsearch/score.h"
#include "srsearch/verifier.h"
#include "srsearch/verifier_spec.h"

namespace srsearch {

inline constexpr int kBridgeProtocolVersion = 1;
inline constexpr char kBridgeCommandEnv[] = "SRSEARCH_BRIDGE_CMD";

struct BridgeVerifierInfo {
  std::string name;
  Direction direction = Direction::kHigherBetter;
  std::vector<ConditionKind> condition_kinds;
};

struct BridgeCapabilities {
  int noise_dim = 0;
  int sample_rate_hz = 0;
  std::vector<BridgeVerifierInfo> verifiers;

  const BridgeVerifierInfo* FindVerifier(const std::string& name) const;
};

struct BridgeOptions {
  std::chrono::milliseconds handshake_timeout{30000};
  // Zero waits until the bridge answers or exits.
  std::chrono::milliseconds request_timeout{0};
  int protocol_version = kBridgeProtocolVersion;
};

// Client end of the newline-delimited JSON protocol spoken over a child
// process's stdin/stdout. Requests on one connection are serialized;
// responses are matched by id and may arrive out of order.
class BridgeClient {
 public:
  // Starts `command` via /bin/sh and completes the hello handshake. Throws
  // BridgeUnavailableError on spawn failure, timeout, version mismatch or a
  // malformed reply.
  static std::unique_ptr<BridgeClient> Launch(const std::string& command,
                                              const BridgeOptions& options = {});
  ~BridgeClient();

  BridgeClient(const BridgeClient&) = delete;
  BridgeClient& operator=(const BridgeClient&) = delete;

  const BridgeCapabilities& capabilities() const { return capabilities_; }

  // Returns the path of the WAV written by the bridge.
  std::filesystem::path Generate(const std::filesystem::path& lr_path,
                                 const LatentNoise& noise);
  double Score(const std::string& verifier, const std::filesystem::path& wav,
               const Condition& condition);

  // Sends bye and reaps the child. Idempotent.
  void Close();

 private:
  BridgeClient(pid_t pid, int to_child, int from_child, BridgeOptions options);

  nlohmann::json Request(const std::string& op, nlohmann::json payload,
                         std::chrono::milliseconds timeout);
  void SendLine(const nlohmann::json& message);
  nlohmann::json ReadMessage(std::chrono::milliseconds timeout);
  [[noreturn]] void AbortConnection(const std::string& why);

  pid_t pid_;
  int to_child_;
  int from_child_;
  BridgeOptions options_;
  BridgeCapabilities capabilities_;
  std::mutex mutex_;
  long next_id_ = 1;
  std::string read_buffer_;
  std::map<long, nlohmann::json> stash_;
  bool closed_ = false;
};

// Generator served by the bridge. The bridge reads the LR input from
// `lr_path`, so the buffer handed to Generate is not transmitted.
class BridgeGenerator : public Generator {
 public:
  BridgeGenerator(std::shared_ptr<BridgeClient> client,
                  std::filesystem::path lr_path);

  GeneratorInfo Info() const override;
  AudioBuffer Generate(const AudioBuffer& lr,
                       const LatentNoise& noise) const override;

 private:
  std::shared_ptr<BridgeClient> client_;
  std::filesystem::path lr_path_;
};

// Verifier served by the bridge. Candidates are written to a temporary WAV
// and scored by path.
class ExternalVerifier : public Verifier {
 public:
  ExternalVerifier(std::shared_ptr<BridgeClient> client, std::string name,
                   std::string bridge_id, Condition condition);

  const std::string& name() const override { return name_; }
  Direction direction() const override { return direction_; }
  Score Evaluate(const AudioBuffer& candidate) const override;

 private:
  std::shared_ptr<BridgeClient> client_;
  std::string name_;
  std::string bridge_id_;
  Condition condition_;
  Direction direction_;
};

// A fresh path in the system temp directory, unique within this process.
std::filesystem::path TempWavPath(const std::string& stem);

}  // namespace srsearch

#endif  // SRSEARCH_BRIDGE_H_
