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

#include "srsearch/verifier_spec.h"

#include <cctype>
#include <set>
#include <string>

#include "srsearch/errors.h"

namespace srsearch {
namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  VerifierSpec ParseAll() {
    VerifierSpec spec = ParseOne(/*depth=*/0);
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParameterError("verifier spec: " + what + " at offset " +
                         std::to_string(pos_) + " in '" + std::string(text_) +
                         "'");
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  // Reads up to an unnested ',' or ')' (or the end), honoring quotes.
  std::string ReadValue() {
    SkipSpace();
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '"') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        out.push_back(text_[pos_++]);
      }
      if (pos_ >= text_.size()) Fail("unterminated quote");
      ++pos_;
      return out;
    }
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') {
      out.push_back(text_[pos_++]);
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) {
      out.pop_back();
    }
    return out;
  }

  std::string ReadIdentifier() {
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_' || text_[pos_] == '.' || text_[pos_] == '-')) {
      out.push_back(text_[pos_++]);
    }
    if (out.empty()) Fail("expected a verifier name");
    return out;
  }

  VerifierSpec ParseOne(int depth) {
    SkipSpace();
    VerifierSpec spec;
    if (Consume("ensemble(")) {
      if (depth > 0) Fail("ensembles cannot be nested");
      spec.name = "ensemble";
      spec.backend = VerifierBackend::kEnsemble;
      while (true) {
        spec.members.push_back(ParseOne(depth + 1));
        SkipSpace();
        if (Consume(",")) continue;
        if (Consume(")")) break;
        Fail("expected ',' or ')'");
      }
      return spec;
    }
    if (Consume("lsd:")) {
      spec.name = "lsd";
      spec.backend = VerifierBackend::kOracleLsd;
      spec.condition = {ConditionKind::kReferenceAudio, ReadValue()};
      if (spec.condition.payload.empty()) Fail("lsd needs a reference path");
      return spec;
    }
    if (Consume("extern:")) {
      spec.backend = VerifierBackend::kExternal;
      spec.bridge_id = ReadIdentifier();
      spec.name = spec.bridge_id;
      if (Consume("?")) {
        const std::size_t eq = text_.find('=', pos_);
        if (eq == std::string_view::npos) Fail("expected KEY=VALUE");
        const std::string_view key = text_.substr(pos_, eq - pos_);
        pos_ = eq + 1;
        if (key == "text") {
          spec.condition.kind = ConditionKind::kReferenceText;
        } else if (key == "transcript") {
          spec.condition.kind = ConditionKind::kTranscript;
        } else if (key == "audio") {
          spec.condition.kind = ConditionKind::kReferenceAudio;
        } else if (key == "speaker") {
          spec.condition.kind = ConditionKind::kSpeakerPrompt;
        } else {
          Fail("unknown condition key '" + std::string(key) + "'");
        }
        spec.condition.payload = ReadValue();
      }
      return spec;
    }
    Fail("expected lsd:, extern: or ensemble(");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view ConditionKindName(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::kNone:
      return "none";
    case ConditionKind::kReferenceAudio:
      return "reference_audio";
    case ConditionKind::kReferenceText:
      return "reference_text";
    case ConditionKind::kTranscript:
      return "transcript";
    case ConditionKind::kSpeakerPrompt:
      return "speaker_prompt";
  }
  return "none";
}

ConditionKind ParseConditionKind(std::string_view name) {
  for (const ConditionKind kind :
       {ConditionKind::kNone, ConditionKind::kReferenceAudio,
        ConditionKind::kReferenceText, ConditionKind::kTranscript,
        ConditionKind::kSpeakerPrompt}) {
    if (ConditionKindName(kind) == name) return kind;
  }
  throw ParameterError("unknown condition kind: " + std::string(name));
}

std::string_view BackendName(VerifierBackend backend) {
  switch (backend) {
    case VerifierBackend::kOracleLsd:
      return "oracle_lsd";
    case VerifierBackend::kExternal:
      return "external";
    case VerifierBackend::kEnsemble:
      return "ensemble";
  }
  return "oracle_lsd";
}

void ValidateVerifierSpec(const VerifierSpec& spec) {
  if (spec.name.empty()) throw ParameterError("verifier without a name");
  const bool has_payload = !spec.condition.payload.empty();
  if (has_payload != (spec.condition.kind != ConditionKind::kNone)) {
    throw ParameterError("verifier '" + spec.name +
                         "': condition payload must be present iff kind != none");
  }
  switch (spec.backend) {
    case VerifierBackend::kOracleLsd:
      if (spec.condition.kind != ConditionKind::kReferenceAudio) {
        throw ParameterError("oracle LSD verifier needs a reference_audio condition");
      }
      break;
    case VerifierBackend::kExternal:
      if (spec.bridge_id.empty()) {
        throw ParameterError("external verifier '" + spec.name +
                             "' has no bridge id");
      }
      break;
    case VerifierBackend::kEnsemble: {
      if (spec.members.size() < 2) {
        throw ParameterError("an ensemble needs at least two members");
      }
      if (!spec.weights.empty() && spec.weights.size() != spec.members.size()) {
        throw ParameterError("ensemble weights must match member count");
      }
      std::set<std::string> names;
      for (const VerifierSpec& member : spec.members) {
        if (member.backend == VerifierBackend::kEnsemble) {
          throw ParameterError("ensembles cannot be nested");
        }
        ValidateVerifierSpec(member);
        if (!names.insert(member.name).second) {
          throw ParameterError("duplicate ensemble member '" + member.name + "'");
        }
      }
      break;
    }
  }
  if (spec.backend != VerifierBackend::kEnsemble && !spec.members.empty()) {
    throw ParameterError("only ensembles have members");
  }
}

VerifierSpec ParseVerifierSpec(std::string_view text) {
  VerifierSpec spec = SpecParser(text).ParseAll();
  ValidateVerifierSpec(spec);
  return spec;
}

nlohmann::json VerifierSpecToJson(const VerifierSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["backend"] = BackendName(spec.backend);
  j["condition"] = {{"kind", ConditionKindName(spec.condition.kind)},
                    {"payload", spec.condition.payload}};
  if (spec.backend == VerifierBackend::kExternal) j["bridge_id"] = spec.bridge_id;
  if (spec.backend == VerifierBackend::kEnsemble) {
    j["members"] = nlohmann::json::array();
    for (const VerifierSpec& m : spec.members) {
      j["members"].push_back(VerifierSpecToJson(m));
    }
    j["weights"] = spec.weights;
  }
  return j;
}

VerifierSpec VerifierSpecFromJson(const nlohmann::json& j) {
  VerifierSpec spec;
  try {
    const std::string backend = j.at("backend").get<std::string>();
    if (backend == "oracle_lsd") {
      spec.backend = VerifierBackend::kOracleLsd;
    } else if (backend == "external") {
      spec.backend = VerifierBackend::kExternal;
    } else if (backend == "ensemble") {
      spec.backend = VerifierBackend::kEnsemble;
    } else {
      throw ParameterError("unknown verifier backend: " + backend);
    }
    spec.name = j.value("name", std::string(BackendName(spec.backend)));
    if (spec.backend == VerifierBackend::kOracleLsd && !j.contains("name")) {
      spec.name = "lsd";
    }
    if (j.contains("condition")) {
      const auto& c = j.at("condition");
      spec.condition.kind =
          ParseConditionKind(c.value("kind", std::string("none")));
      spec.condition.payload = c.value("payload", std::string());
    }
    spec.bridge_id = j.value("bridge_id", std::string());
    if (spec.backend == VerifierBackend::kExternal && spec.bridge_id.empty()) {
      spec.bridge_id = spec.name;
    }
    if (j.contains("members")) {
      for (const auto& m : j.at("members")) {
        spec.members.push_back(VerifierSpecFromJson(m));
      }
    }
    if (j.contains("weights")) {
      spec.weights = j.at("weights").get<std::vector<double>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("verifier spec JSON: ") + e.what());
  }
  ValidateVerifierSpec(spec);
  return spec;
}

}  // namespace srsearch
