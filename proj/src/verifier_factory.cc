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

#include "srsearch/verifier_factory.h"

#include <algorithm>

#include "srsearch/errors.h"
#include "srsearch/wav_io.h"

namespace srsearch {
namespace {

constexpr const char* kAestheticsAxes[] = {"ce", "cu", "pc", "pq"};

std::shared_ptr<const Verifier> MakeExternal(const VerifierSpec& spec,
                                             const std::string& bridge_name,
                                             const std::string& name,
                                             const VerifierContext& context) {
  const BridgeVerifierInfo* info =
      context.bridge->capabilities().FindVerifier(bridge_name);
  const auto& kinds = info->condition_kinds;
  if (std::find(kinds.begin(), kinds.end(), spec.condition.kind) == kinds.end()) {
    throw ParameterError("bridge verifier '" + bridge_name +
                         "' does not accept condition kind " +
                         std::string(ConditionKindName(spec.condition.kind)));
  }
  return std::make_shared<ExternalVerifier>(context.bridge, name, bridge_name,
                                            spec.condition);
}

ScoreColumn BuildColumn(const VerifierSpec& spec, const VerifierContext& context) {
  switch (spec.backend) {
    case VerifierBackend::kOracleLsd: {
      AudioBuffer reference = LoadWav(spec.condition.payload);
      return {spec.name, {std::make_shared<OracleLsdVerifier>(
                             spec.name, std::move(reference), context.stft)}};
    }
    case VerifierBackend::kExternal: {
      if (!context.bridge) {
        throw BridgeUnavailableError("verifier '" + spec.name +
                                     "' needs a bridge; set --bridge-cmd or " +
                                     kBridgeCommandEnv);
      }
      const BridgeCapabilities& caps = context.bridge->capabilities();
      if (caps.FindVerifier(spec.bridge_id) != nullptr) {
        return {spec.name, {MakeExternal(spec, spec.bridge_id, spec.name, context)}};
      }
      ScoreColumn column{spec.name, {}};
      for (const char* axis : kAestheticsAxes) {
        const std::string axis_name = spec.bridge_id + "." + axis;
        if (caps.FindVerifier(axis_name) == nullptr) {
          throw ParameterError("bridge has no verifier named '" +
                               spec.bridge_id + "'");
        }
        column.axes.push_back(MakeExternal(spec, axis_name,
                                           spec.name + "." + axis, context));
      }
      return column;
    }
    case VerifierBackend::kEnsemble:
      break;
  }
  throw ParameterError("ensembles cannot be nested");
}

}  // namespace

bool NeedsBridge(const VerifierSpec& spec) {
  if (spec.backend == VerifierBackend::kExternal) return true;
  return std::any_of(spec.members.begin(), spec.members.end(), NeedsBridge);
}

CandidateScorer BuildScorer(const VerifierSpec& spec,
                            const VerifierContext& context) {
  ValidateVerifierSpec(spec);
  if (NeedsBridge(spec) && !context.bridge) {
    throw BridgeUnavailableError(
        "an external verifier is configured but no bridge is available");
  }
  if (spec.backend == VerifierBackend::kEnsemble) {
    std::vector<ScoreColumn> columns;
    for (const VerifierSpec& member : spec.members) {
      columns.push_back(BuildColumn(member, context));
    }
    return CandidateScorer::Ensemble(spec.name, std::move(columns), spec.weights);
  }
  ScoreColumn column = BuildColumn(spec, context);
  if (column.is_aesthetics()) {
    return CandidateScorer::Aesthetics(column.name, std::move(column.axes));
  }
  return CandidateScorer::Single(std::move(column.axes.front()));
}

}  // namespace srsearch
