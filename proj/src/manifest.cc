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

#include "srsearch/manifest.h"

#include <cstdint>
#include <fstream>
#include <string>

#include "srsearch/errors.h"

namespace srsearch {
namespace {

using nlohmann::json;

json ScoreToJson(const Score& s) {
  return {{"value", s.value}, {"direction", DirectionName(s.direction)}};
}

Score ScoreFromJson(const json& j) {
  return {j.at("value").get<double>(),
          ParseDirection(j.at("direction").get<std::string>())};
}

std::uint64_t ParseHex64(const std::string& s) {
  if (s.size() != 16) throw FormatError("digest must be 16 hex digits: " + s);
  return std::stoull(s, nullptr, 16);
}

void Require(std::vector<std::string>& errors, const json& j, const char* key,
             json::value_t type, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    errors.push_back(where + ": missing '" + key + "'");
    return;
  }
  const json& v = j.at(key);
  const bool ok =
      v.type() == type ||
      (type == json::value_t::number_float && v.is_number()) ||
      (type == json::value_t::number_integer && v.is_number_integer()) ||
      (type == json::value_t::number_unsigned && v.is_number_unsigned());
  if (!ok) errors.push_back(where + ": '" + key + "' has the wrong type");
}

}  // namespace

json SearchConfigToJson(const SearchConfig& c) {
  return {{"algorithm", AlgorithmName(c.algorithm)},
          {"budget_n", c.budget_n},
          {"neighbors_k", c.neighbors_k},
          {"lambda", c.lambda},
          {"master_seed", c.master_seed},
          {"pivot_policy", "elitist"},
          {"neighborhood", NeighborhoodName(c.neighborhood)},
          {"parallelism", c.parallelism}};
}

SearchConfig SearchConfigFromJson(const json& j, SearchConfig c) {
  try {
    if (j.contains("algorithm")) {
      c.algorithm = ParseAlgorithm(j.at("algorithm").get<std::string>());
    }
    c.budget_n = j.value("budget_n", c.budget_n);
    c.neighbors_k = j.value("neighbors_k", c.neighbors_k);
    c.lambda = j.value("lambda", c.lambda);
    c.master_seed = j.value("master_seed", c.master_seed);
    c.parallelism = j.value("parallelism", c.parallelism);
    if (j.contains("pivot_policy") && j.at("pivot_policy") != "elitist") {
      throw ParameterError("only the elitist pivot policy is supported");
    }
    if (j.contains("neighborhood")) {
      c.neighborhood = ParseNeighborhood(j.at("neighborhood").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ParameterError(std::string("search config JSON: ") + e.what());
  }
  return c;
}

json ManifestToJson(const RunManifest& m) {
  json j;
  j["schema_version"] = m.schema_version;
  j["config"] = SearchConfigToJson(m.config);
  j["generator_info"] = {{"noise_dim", m.generator_info.noise_dim},
                         {"output_sample_rate_hz",
                          m.generator_info.output_sample_rate_hz},
                         {"deterministic", m.generator_info.deterministic}};
  j["verifier_specs"] = json::array();
  for (const VerifierSpec& s : m.verifier_specs) {
    j["verifier_specs"].push_back(VerifierSpecToJson(s));
  }
  j["candidates"] = json::array();
  for (const CandidateRecord& r : m.candidates) {
    json rec;
    rec["index"] = r.index;
    rec["round"] = r.round;
    rec["noise_seed"] = r.noise_seed;
    rec["noise_digest"] = HexDigest(r.noise_digest);
    rec["scores"] = json::object();
    for (const auto& [name, score] : r.scores) {
      rec["scores"][name] = ScoreToJson(score);
    }
    rec["ranks"] = json::object();
    for (const auto& [name, rank] : r.ranks) rec["ranks"][name] = rank;
    rec["selected"] = r.selected;
    rec["artifact_path"] =
        r.artifact_path ? json(*r.artifact_path) : json(nullptr);
    rec["reused"] = r.reused;
    rec["source_index"] = r.source_index;
    j["candidates"].push_back(std::move(rec));
  }
  j["selected_index"] = m.selected_index;
  j["selection_score"] = m.selection_score;
  j["generator_calls"] = m.generator_calls;
  j["wall_times_ms"] = m.wall_times_ms;
  return j;
}

RunManifest ManifestFromJson(const json& j) {
  const std::vector<std::string> errors = ValidateManifestJson(j);
  if (!errors.empty()) throw FormatError("invalid manifest: " + errors.front());
  RunManifest m;
  try {
    m.schema_version = j.at("schema_version").get<int>();
    m.config = SearchConfigFromJson(j.at("config"));
    const json& g = j.at("generator_info");
    m.generator_info = {g.at("noise_dim").get<int>(),
                        g.at("output_sample_rate_hz").get<int>(),
                        g.at("deterministic").get<bool>()};
    for (const json& s : j.at("verifier_specs")) {
      m.verifier_specs.push_back(VerifierSpecFromJson(s));
    }
    for (const json& rec : j.at("candidates")) {
      CandidateRecord r;
      r.index = rec.at("index").get<std::size_t>();
      r.round = rec.at("round").get<int>();
      r.noise_seed = rec.at("noise_seed").get<std::uint64_t>();
      r.noise_digest = ParseHex64(rec.at("noise_digest").get<std::string>());
      for (const auto& [name, score] : rec.at("scores").items()) {
        r.scores[name] = ScoreFromJson(score);
      }
      for (const auto& [name, rank] : rec.at("ranks").items()) {
        r.ranks[name] = rank.get<double>();
      }
      r.selected = rec.at("selected").get<bool>();
      if (!rec.at("artifact_path").is_null()) {
        r.artifact_path = rec.at("artifact_path").get<std::string>();
      }
      r.reused = rec.value("reused", false);
      r.source_index = rec.value("source_index", r.index);
      m.candidates.push_back(std::move(r));
    }
    m.selected_index = j.at("selected_index").get<std::size_t>();
    m.selection_score = j.at("selection_score").get<std::string>();
    m.generator_calls = j.at("generator_calls").get<std::size_t>();
    m.wall_times_ms =
        j.at("wall_times_ms").get<std::map<std::string, std::int64_t>>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid manifest: ") + e.what());
  }
  return m;
}

std::vector<std::string> ValidateManifestJson(const json& j) {
  using vt = json::value_t;
  std::vector<std::string> errors;
  if (!j.is_object()) return {"manifest is not an object"};
  Require(errors, j, "schema_version", vt::number_integer, "manifest");
  if (j.contains("schema_version") && j.at("schema_version").is_number_integer() &&
      j.at("schema_version").get<int>() != kManifestSchemaVersion) {
    errors.push_back("manifest: unsupported schema_version");
  }
  Require(errors, j, "config", vt::object, "manifest");
  Require(errors, j, "generator_info", vt::object, "manifest");
  Require(errors, j, "verifier_specs", vt::array, "manifest");
  Require(errors, j, "candidates", vt::array, "manifest");
  Require(errors, j, "selected_index", vt::number_unsigned, "manifest");
  Require(errors, j, "selection_score", vt::string, "manifest");
  Require(errors, j, "generator_calls", vt::number_unsigned, "manifest");
  Require(errors, j, "wall_times_ms", vt::object, "manifest");
  if (!errors.empty()) return errors;

  const json& c = j.at("config");
  for (const char* key : {"budget_n", "neighbors_k", "parallelism"}) {
    Require(errors, c, key, vt::number_integer, "config");
  }
  Require(errors, c, "lambda", vt::number_float, "config");
  Require(errors, c, "master_seed", vt::number_unsigned, "config");
  Require(errors, c, "algorithm", vt::string, "config");
  Require(errors, c, "pivot_policy", vt::string, "config");
  Require(errors, c, "neighborhood", vt::string, "config");
  const json& g = j.at("generator_info");
  Require(errors, g, "noise_dim", vt::number_integer, "generator_info");
  Require(errors, g, "output_sample_rate_hz", vt::number_integer,
          "generator_info");
  Require(errors, g, "deterministic", vt::boolean, "generator_info");

  const json& cands = j.at("candidates");
  std::size_t selected = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const json& r = cands[i];
    const std::string where = "candidates[" + std::to_string(i) + "]";
    Require(errors, r, "index", vt::number_unsigned, where);
    Require(errors, r, "round", vt::number_integer, where);
    Require(errors, r, "noise_seed", vt::number_unsigned, where);
    Require(errors, r, "noise_digest", vt::string, where);
    Require(errors, r, "scores", vt::object, where);
    Require(errors, r, "ranks", vt::object, where);
    Require(errors, r, "selected", vt::boolean, where);
    if (!r.is_object()) continue;
    if (r.contains("noise_digest") && r.at("noise_digest").is_string()) {
      const std::string d = r.at("noise_digest").get<std::string>();
      if (d.size() != 16 ||
          d.find_first_not_of("0123456789abcdef") != std::string::npos) {
        errors.push_back(where + ": noise_digest is not 16 hex digits");
      }
    }
    if (r.contains("scores") && r.at("scores").is_object()) {
      for (const auto& [name, s] : r.at("scores").items()) {
        Require(errors, s, "value", vt::number_float, where + ".scores." + name);
        Require(errors, s, "direction", vt::string, where + ".scores." + name);
      }
    }
    if (r.contains("selected") && r.at("selected").is_boolean() &&
        r.at("selected").get<bool>()) {
      ++selected;
      if (j.at("selected_index").get<std::size_t>() != i) {
        errors.push_back(where + ": selected but not selected_index");
      }
    }
  }
  if (selected != 1) {
    errors.push_back("exactly one candidate must be selected");
  }
  return errors;
}

std::string DumpManifest(const RunManifest& manifest) {
  return ManifestToJson(manifest).dump(2) + "\n";
}

void WriteManifest(const RunManifest& manifest,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << DumpManifest(manifest);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace srsearch
