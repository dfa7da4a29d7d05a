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

#ifndef SRSEARCH_VERIFIER_FACTORY_H_
#define SRSEARCH_VERIFIER_FACTORY_H_

#include <memory>

#include "srsearch/bridge.h"
#include "srsearch/scorer.h"
#include "srsearch/stft.h"
#include "srsearch/verifier_spec.h"

namespace srsearch {

struct VerifierContext {
  StftParams stft;
  // Required by external verifiers; null means no bridge is configured.
  std::shared_ptr<BridgeClient> bridge;
};

// True if any node of the tree is served by the bridge.
bool NeedsBridge(const VerifierSpec& spec);

// Builds the scorer for a validated spec tree. An external name the bridge
// does not announce directly resolves to an aesthetics column when the
// bridge announces NAME.ce, NAME.cu, NAME.pc and NAME.pq. Throws
// BridgeUnavailableError when an external verifier is requested without a
// bridge.
CandidateScorer BuildScorer(const VerifierSpec& spec, const VerifierContext& context);

}  // namespace srsearch

#endif  // SRSEARCH_VERIFIER_FACTORY_H_
