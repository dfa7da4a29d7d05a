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

#include "srsearch/bridge.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <thread>

#include "srsearch/errors.h"
#include "srsearch/wav_io.h"

extern char** environ;

namespace srsearch {
namespace {

using nlohmann::json;
using Millis = std::chrono::milliseconds;

class MessageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BridgeCapabilities ParseCapabilities(const json& payload) {
  BridgeCapabilities caps;
  caps.noise_dim = payload.at("noise_dim").get<int>();
  caps.sample_rate_hz = payload.at("sample_rate_hz").get<int>();
  for (const json& v : payload.at("verifiers")) {
    BridgeVerifierInfo info;
    info.name = v.at("name").get<std::string>();
    info.direction = ParseDirection(v.at("direction").get<std::string>());
    for (const json& k : v.at("condition_kinds")) {
      info.condition_kinds.push_back(ParseConditionKind(k.get<std::string>()));
    }
    caps.verifiers.push_back(std::move(info));
  }
  if (caps.noise_dim < 1 || caps.sample_rate_hz < 1) {
    throw ParameterError("bridge announced a non-positive dimension or rate");
  }
  return caps;
}

}  // namespace

const BridgeVerifierInfo* BridgeCapabilities::FindVerifier(
    const std::string& name) const {
  for (const BridgeVerifierInfo& v : verifiers) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

std::filesystem::path TempWavPath(const std::string& stem) {
  static std::atomic<unsigned long> counter{0};
  return std::filesystem::temp_directory_path() /
         (stem + "-" + std::to_string(::getpid()) + "-" +
          std::to_string(counter++) + ".wav");
}

std::unique_ptr<BridgeClient> BridgeClient::Launch(const std::string& command,
                                                   const BridgeOptions& options) {
  if (command.empty()) throw BridgeUnavailableError("no bridge command given");
  // Writes to a dead bridge fail with EPIPE.
  ::signal(SIGPIPE, SIG_IGN);

  int in_pipe[2];   // parent writes, child reads
  int out_pipe[2];  // child writes, parent reads
  if (::pipe(in_pipe) != 0) {
    throw BridgeUnavailableError(std::string("pipe: ") + std::strerror(errno));
  }
  if (::pipe(out_pipe) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw BridgeUnavailableError(std::string("pipe: ") + std::strerror(errno));
  }
  ::fcntl(in_pipe[1], F_SETFD, FD_CLOEXEC);
  ::fcntl(out_pipe[0], F_SETFD, FD_CLOEXEC);

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);
  posix_spawn_file_actions_addclose(&actions, in_pipe[0]);
  posix_spawn_file_actions_addclose(&actions, out_pipe[1]);

  std::string shell = "/bin/sh";
  std::string flag = "-c";
  std::string cmd = command;
  char* argv[] = {shell.data(), flag.data(), cmd.data(), nullptr};
  // Own process group, so Close can reach whatever the shell starts.
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);
  pid_t pid = -1;
  const int rc = ::posix_spawn(&pid, "/bin/sh", &actions, &attr, argv, environ);
  posix_spawnattr_destroy(&attr);
  posix_spawn_file_actions_destroy(&actions);
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  if (rc != 0) {
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    throw BridgeUnavailableError(std::string("spawn failed: ") +
                                 std::strerror(rc));
  }

  std::unique_ptr<BridgeClient> client(
      new BridgeClient(pid, in_pipe[1], out_pipe[0], options));
  try {
    const json payload =
        client->Request("hello", {{"protocol_version", options.protocol_version}},
                        options.handshake_timeout);
    client->capabilities_ = ParseCapabilities(payload);
  } catch (const BridgeUnavailableError&) {
    throw;
  } catch (const std::exception& e) {
    throw BridgeUnavailableError(std::string("bridge handshake failed: ") +
                                 e.what());
  }
  return client;
}

BridgeClient::BridgeClient(pid_t pid, int to_child, int from_child,
                           BridgeOptions options)
    : pid_(pid),
      to_child_(to_child),
      from_child_(from_child),
      options_(options) {}

BridgeClient::~BridgeClient() { Close(); }

void BridgeClient::Close() {
  std::scoped_lock lock(mutex_);
  if (closed_) return;
  closed_ = true;
  try {
    SendLine({{"op", "bye"}, {"id", next_id_++}, {"payload", json::object()}});
  } catch (const std::exception&) {
  }
  ::close(to_child_);
  ::close(from_child_);
  for (int i = 0; i < 50; ++i) {
    int status = 0;
    if (::waitpid(pid_, &status, WNOHANG) != 0) {
      ::kill(-pid_, SIGKILL);
      return;
    }
    std::this_thread::sleep_for(Millis(10));
  }
  ::kill(-pid_, SIGKILL);
  ::waitpid(pid_, nullptr, 0);
}

void BridgeClient::SendLine(const json& message) {
  const std::string line = message.dump() + "\n";
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n =
        ::write(to_child_, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw MessageError(std::string("bridge write failed: ") +
                         std::strerror(errno));
    }
    written += static_cast<std::size_t>(n);
  }
}

json BridgeClient::ReadMessage(Millis timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (true) {
    const std::size_t newline = read_buffer_.find('\n');
    if (newline != std::string::npos) {
      const std::string line = read_buffer_.substr(0, newline);
      read_buffer_.erase(0, newline + 1);
      json message = json::parse(line, nullptr, /*allow_exceptions=*/false);
      if (message.is_discarded() || !message.is_object() ||
          !message.contains("op") || !message.contains("id")) {
        AbortConnection("malformed line from bridge");
      }
      return message;
    }
    int wait_ms = -1;
    if (timeout.count() > 0) {
      const auto left = std::chrono::duration_cast<Millis>(
          deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) throw BridgeUnavailableError("bridge timed out");
      wait_ms = static_cast<int>(left.count());
    }
    pollfd pfd{from_child_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, wait_ms);
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw MessageError(std::string("poll failed: ") + std::strerror(errno));
    }
    if (ready == 0) throw BridgeUnavailableError("bridge timed out");
    char chunk[4096];
    const ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      throw MessageError(std::string("bridge read failed: ") +
                         std::strerror(errno));
    }
    if (n == 0) throw MessageError("bridge closed its output");
    read_buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void BridgeClient::AbortConnection(const std::string& why) {
  try {
    SendLine({{"op", "error"}, {"id", 0}, {"payload", {{"message", why}}}});
  } catch (const std::exception&) {
  }
  ::close(to_child_);
  to_child_ = -1;
  ::kill(pid_, SIGTERM);
  throw MessageError(why);
}

json BridgeClient::Request(const std::string& op, json payload, Millis timeout) {
  std::scoped_lock lock(mutex_);
  if (closed_ || to_child_ < 0) throw MessageError("bridge connection closed");
  const long id = next_id_++;
  SendLine({{"op", op}, {"id", id}, {"payload", std::move(payload)}});

  json reply;
  if (auto it = stash_.find(id); it != stash_.end()) {
    reply = std::move(it->second);
    stash_.erase(it);
  } else {
    while (true) {
      json message = ReadMessage(timeout);
      const long got = message.at("id").get<long>();
      if (got == id) {
        reply = std::move(message);
        break;
      }
      stash_[got] = std::move(message);
    }
  }
  const std::string reply_op = reply.at("op").get<std::string>();
  const json body = reply.value("payload", json::object());
  if (reply_op == "error") {
    const std::string message = body.value("message", std::string("unknown"));
    if (op == "hello") {
      throw BridgeUnavailableError("bridge rejected hello: " + message);
    }
    throw MessageError("bridge error on " + op + ": " + message);
  }
  if (reply_op != op) {
    throw MessageError("bridge answered " + op + " with " + reply_op);
  }
  return body;
}

std::filesystem::path BridgeClient::Generate(const std::filesystem::path& lr_path,
                                             const LatentNoise& noise) {
  const json body = Request(
      "generate", {{"lr_path", lr_path.string()}, {"noise", noise.values}},
      options_.request_timeout);
  return body.at("hr_path").get<std::string>();
}

double BridgeClient::Score(const std::string& verifier,
                           const std::filesystem::path& wav,
                           const Condition& condition) {
  const json body = Request(
      "score",
      {{"verifier", verifier},
       {"wav_path", wav.string()},
       {"condition",
        {{"kind", ConditionKindName(condition.kind)},
         {"payload", condition.payload}}}},
      options_.request_timeout);
  return body.at("score").get<double>();
}

BridgeGenerator::BridgeGenerator(std::shared_ptr<BridgeClient> client,
                                 std::filesystem::path lr_path)
    : client_(std::move(client)), lr_path_(std::move(lr_path)) {}

GeneratorInfo BridgeGenerator::Info() const {
  const BridgeCapabilities& caps = client_->capabilities();
  return {caps.noise_dim, caps.sample_rate_hz, true};
}

AudioBuffer BridgeGenerator::Generate(const AudioBuffer& /*lr*/,
                                      const LatentNoise& noise) const {
  const std::filesystem::path out = client_->Generate(lr_path_, noise);
  AudioBuffer audio = LoadWav(out);
  std::error_code ec;
  if (!std::filesystem::equivalent(out, lr_path_, ec)) {
    std::filesystem::remove(out, ec);
  }
  return audio;
}

ExternalVerifier::ExternalVerifier(std::shared_ptr<BridgeClient> client,
                                   std::string name, std::string bridge_id,
                                   Condition condition)
    : client_(std::move(client)),
      name_(std::move(name)),
      bridge_id_(std::move(bridge_id)),
      condition_(std::move(condition)) {
  const BridgeVerifierInfo* info = client_->capabilities().FindVerifier(bridge_id_);
  if (info == nullptr) {
    throw ParameterError("bridge has no verifier named '" + bridge_id_ + "'");
  }
  direction_ = info->direction;
}

Score ExternalVerifier::Evaluate(const AudioBuffer& candidate) const {
  const std::filesystem::path wav = TempWavPath("srsearch-score");
  SaveWav(candidate, wav, WavCodec::kFloat32);
  double value = 0.0;
  try {
    value = client_->Score(bridge_id_, wav, condition_);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(wav, ec);
    throw;
  }
  std::error_code ec;
  std::filesystem::remove(wav, ec);
  return {value, direction_};
}

}  // namespace srsearch
