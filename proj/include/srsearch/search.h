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

#ifndef SRSEARCH_SEARCH_H_
#define SRSEARCH_SEARCH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srsearch/audio_buffer.h"
#include "srsearch/generator.h"
#include "srsearch/random.h"
#include "srsearch/score.h"
#include "srsearch/scorer.h"
#include "srsearch/verifier_spec.h"

namespace srsearch {

enum class SearchAlgorithm { kRandom, kZeroOrder };
enum class PivotPolicy { kElitist };

// How zero-order search draws a neighbor of the pivot n from fresh noise e:
//   kSphericalMix:   y = lambda * n + sqrt(1 - lambda^2) * e
//                    (keeps N(0, I) marginals; lambda -> 1 is a small step)
//   kEuclideanShell: y = n + lambda * sqrt(dim) * e / |e|
//                    (|y - n| is exactly lambda * sqrt(dim))
enum class Neighborhood { kSphericalMix, kEuclideanShell };

std::string_view AlgorithmName(SearchAlgorithm algorithm);
SearchAlgorithm ParseAlgorithm(std::string_view name);
std::string_view NeighborhoodName(Neighborhood neighborhood);
Neighborhood ParseNeighborhood(std::string_view name);

struct SearchConfig {
  SearchAlgorithm algorithm = SearchAlgorithm::kRandom;
  int budget_n = 120;
  int neighbors_k = 2;
  double lambda = 0.99;
  std::uint64_t master_seed = 0;
  PivotPolicy pivot_policy = PivotPolicy::kElitist;
  Neighborhood neighborhood = Neighborhood::kSphericalMix;
  int parallelism = 1;

  int rounds() const { return neighbors_k > 0 ? budget_n / neighbors_k : 0; }
  bool operator==(const SearchConfig&) const = default;
};

// Throws ParameterError if the config breaks its invariants.
void CheckSearchConfig(const SearchConfig& config);

struct CandidateRecord {
  std::size_t index = 0;
  int round = 0;
  std::uint64_t noise_seed = 0;
  std::uint64_t noise_digest = 0;
  std::map<std::string, Score> scores;
  std::map<std::string, double> ranks;
  bool selected = false;
  std::optional<std::string> artifact_path;
  // Zero-order pivot carried into a later round: its score is reused and no
  // generator call is made. `source_index` names the record that generated
  // it.
  bool reused = false;
  std::size_t source_index = 0;

  bool operator==(const CandidateRecord&) const = default;
};

inline constexpr int kManifestSchemaVersion = 1;

struct RunManifest {
  int schema_version = kManifestSchemaVersion;
  SearchConfig config;
  GeneratorInfo generator_info;
  std::vector<VerifierSpec> verifier_specs;
  std::vector<CandidateRecord> candidates;
  std::size_t selected_index = 0;
  // Score used for selection, i.e. candidates[selected_index].scores[name].
  std::string selection_score;
  std::size_t generator_calls = 0;
  std::map<std::string, std::int64_t> wall_times_ms;
};

struct SearchResult {
  RunManifest manifest;
  AudioBuffer selected_audio;
  // Filled only when SearchOptions::keep_candidates is set: one buffer per
  // generator call, tagged with the candidate index that produced it.
  std::vector<std::pair<std::size_t, AudioBuffer>> generated;
};

struct SearchOptions {
  bool keep_candidates = false;
};

LatentNoise PerturbNoise(const LatentNoise& pivot, double lambda,
                         std::uint64_t seed,
                         Neighborhood neighborhood = Neighborhood::kSphericalMix);

// Draws N independent noises (seed i = DeriveSeed(master, i)), generates and
// scores every candidate, and keeps the best. Rank-based scorers rank over
// all N.
SearchResult RandomSearch(const AudioBuffer& lr, const Generator& generator,
                          const CandidateScorer& scorer,
                          const SearchConfig& config,
                          const SearchOptions& options = {});

// Elitist pivot refinement: each of floor(N/K) rounds scores the pivot
// (cached after round 0) against K-1 neighbors drawn with seed
// DeriveSeed(master, r*K + k); the round winner becomes the next pivot.
// Rank-based scorers rank within each round.
SearchResult ZeroOrderSearch(const AudioBuffer& lr, const Generator& generator,
                             const CandidateScorer& scorer,
                             const SearchConfig& config,
                             const SearchOptions& options = {});

SearchResult RunSearch(const AudioBuffer& lr, const Generator& generator,
                       const CandidateScorer& scorer, const SearchConfig& config,
                       const SearchOptions& options = {});

}  // namespace srsearch

#endif  // SRSEARCH_SEARCH_H_
