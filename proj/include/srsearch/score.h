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

#ifndef SRSEARCH_SCORE_H_
#define SRSEARCH_SCORE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srsearch {

enum class Direction { kHigherBetter, kLowerBetter };

std::string_view DirectionName(Direction direction);
// Accepts "higher_better" / "lower_better"; throws ParameterError otherwise.
Direction ParseDirection(std::string_view name);

// Raw verifier output. The direction travels with the value instead of
// being folded into its sign.
struct Score {
  double value = 0.0;
  Direction direction = Direction::kHigherBetter;

  bool operator==(const Score&) const = default;
};

// True if `a` is strictly better than `b`. Both must share a direction.
inline bool Better(const Score& a, const Score& b) {
  return a.direction == Direction::kHigherBetter ? a.value > b.value
                                                 : a.value < b.value;
}

// N candidates by M verifiers.
struct ScoreTable {
  std::vector<std::string> verifier_names;
  std::vector<std::vector<Score>> rows;

  std::size_t num_candidates() const { return rows.size(); }
  std::size_t num_verifiers() const { return verifier_names.size(); }
  std::vector<Score> Column(std::size_t m) const;
};

// Rectangular, finite, one direction per column. Throws ParameterError or
// DimensionError.
void CheckScoreTable(const ScoreTable& table);

// Rank 1 is best. Tied scores share the mean of the ranks they span, so the
// ranks always sum to N(N+1)/2. Throws ParameterError on an empty list or
// mixed directions.
std::vector<double> FractionalRanks(std::span<const Score> scores);

// Per candidate, the (weighted) mean over columns of its fractional rank in
// each column. Lower is better. Requires at least two columns; `weights` is
// either empty (equal weights) or one positive weight per column.
std::vector<Score> EnsembleScores(const ScoreTable& table,
                                  std::span<const double> weights = {});

// Mean fractional rank over the four aesthetics axes (content enjoyment,
// content usefulness, production complexity, production quality), all of
// which are higher-better.
std::vector<Score> AggregateAesthetics(std::span<const double> ce,
                                       std::span<const double> cu,
                                       std::span<const double> pc,
                                       std::span<const double> pq);

// Index of the best score; ties go to the lowest index.
std::size_t SelectBest(std::span<const Score> scores);

}  // namespace srsearch

#endif  // SRSEARCH_SCORE_H_
