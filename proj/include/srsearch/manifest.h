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

#ifndef SRSEARCH_MANIFEST_H_
#define SRSEARCH_MANIFEST_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "srsearch/search.h"

namespace srsearch {

// Keys are emitted in sorted order; 64-bit digests as 16 hex digits.
nlohmann::json ManifestToJson(const RunManifest& manifest);
RunManifest ManifestFromJson(const nlohmann::json& j);

nlohmann::json SearchConfigToJson(const SearchConfig& config);
SearchConfig SearchConfigFromJson(const nlohmann::json& j,
                                  SearchConfig defaults = {});

// Structural check against schema version kManifestSchemaVersion. Returns a
// list of problems; empty means valid.
std::vector<std::string> ValidateManifestJson(const nlohmann::json& j);

// Serialized form used for manifest.json: two-space indent, trailing newline.
std::string DumpManifest(const RunManifest& manifest);
void WriteManifest(const RunManifest& manifest,
                   const std::filesystem::path& path);

}  // namespace srsearch

#endif  // SRSEARCH_MANIFEST_H_
