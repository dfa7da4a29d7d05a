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

#ifndef SRSEARCH_VERIFIER_SPEC_H_
#define SRSEARCH_VERIFIER_SPEC_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace srsearch {

enum class ConditionKind {
  kNone,
  kReferenceAudio,
  kReferenceText,
  kTranscript,
  kSpeakerPrompt,
};

std::string_view ConditionKindName(ConditionKind kind);
ConditionKind ParseConditionKind(std::string_view name);

// Optional conditioning input: a file path for audio kinds, text otherwise.
struct Condition {
  ConditionKind kind = ConditionKind::kNone;
  std::string payload;

  bool operator==(const Condition&) const = default;
};

enum class VerifierBackend { kOracleLsd, kExternal, kEnsemble };

std::string_view BackendName(VerifierBackend backend);

struct VerifierSpec {
  std::string name;
  VerifierBackend backend = VerifierBackend::kOracleLsd;
  Condition condition;
  // Ensemble only; members are never ensembles themselves.
  std::vector<VerifierSpec> members;
  // Ensemble only; empty means equal weights.
  std::vector<double> weights;
  // External only: the verifier name announced by the bridge.
  std::string bridge_id;

  bool operator==(const VerifierSpec&) const = default;
};

// Throws ParameterError when the tree breaks a structural rule.
void ValidateVerifierSpec(const VerifierSpec& spec);

// Mini-language:
//   lsd:PATH
//   extern:NAME[?KEY=VALUE]   KEY in {text, transcript, audio, speaker};
//                             VALUE bare or "double quoted"
//   ensemble(SPEC,SPEC[,...])
VerifierSpec ParseVerifierSpec(std::string_view text);

nlohmann::json VerifierSpecToJson(const VerifierSpec& spec);
VerifierSpec VerifierSpecFromJson(const nlohmann::json& j);

}  // namespace srsearch

#endif  // SRSEARCH_VERIFIER_SPEC_H_
