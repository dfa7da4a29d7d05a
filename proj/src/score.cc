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

#include "srsearch/score.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "srsearch/errors.h"

namespace srsearch {
namespace {

void CheckUniform(std::span<const Score> scores) {
  if (scores.empty()) throw ParameterError("no scores");
  for (const Score& s : scores) {
    if (s.direction != scores.front().direction) {
      throw ParameterError("scores mix higher_better and lower_better");
    }
  }
}

}  // namespace

std::string_view DirectionName(Direction direction) {
  return direction == Direction::kHigherBetter ? "higher_better"
                                               : "lower_better";
}

Direction ParseDirection(std::string_view name) {
  if (name == "higher_better") return Direction::kHigherBetter;
  if (name == "lower_better") return Direction::kLowerBetter;
  throw ParameterError("unknown score direction: " + std::string(name));
}

std::vector<Score> ScoreTable::Column(std::size_t m) const {
  std::vector<Score> column;
  column.reserve(rows.size());
  for (const auto& row : rows) column.push_back(row.at(m));
  return column;
}

void CheckScoreTable(const ScoreTable& table) {
  if (table.rows.empty() || table.verifier_names.empty()) {
    throw ParameterError("empty score table");
  }
  const std::size_t m = table.verifier_names.size();
  for (const auto& row : table.rows) {
    if (row.size() != m) throw DimensionError("score table is not rectangular");
    for (std::size_t c = 0; c < m; ++c) {
      if (!std::isfinite(row[c].value)) {
        throw ParameterError("non-finite score for " + table.verifier_names[c]);
      }
      if (row[c].direction != table.rows.front()[c].direction) {
        throw ParameterError("mixed directions in column " +
                             table.verifier_names[c]);
      }
    }
  }
}

std::vector<double> FractionalRanks(std::span<const Score> scores) {
  CheckUniform(scores);
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return Better(scores[a], scores[b]);
  });

  std::vector<double> ranks(n);
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && scores[order[end]].value == scores[order[start]].value) {
      ++end;
    }
    // Positions start..end-1 hold ranks start+1..end.
    const double mean_rank = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t i = start; i < end; ++i) ranks[order[i]] = mean_rank;
    start = end;
  }
  return ranks;
}

std::vector<Score> EnsembleScores(const ScoreTable& table,
                                  std::span<const double> weights) {
  CheckScoreTable(table);
  const std::size_t m = table.num_verifiers();
  if (m < 2) throw ParameterError("an ensemble needs at least two verifiers");
  std::vector<double> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(m, 1.0);
  if (w.size() != m) throw DimensionError("one ensemble weight per verifier");
  double weight_sum = 0.0;
  for (const double v : w) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ParameterError("ensemble weights must be positive");
    }
    weight_sum += v;
  }

  std::vector<double> acc(table.num_candidates(), 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    const std::vector<Score> column = table.Column(c);
    const std::vector<double> ranks = FractionalRanks(column);
    for (std::size_t i = 0; i < ranks.size(); ++i) acc[i] += w[c] * ranks[i];
  }
  std::vector<Score> out;
  out.reserve(acc.size());
  for (const double a : acc) {
    out.push_back({a / weight_sum, Direction::kLowerBetter});
  }
  return out;
}

std::vector<Score> AggregateAesthetics(std::span<const double> ce,
                                       std::span<const double> cu,
                                       std::span<const double> pc,
                                       std::span<const double> pq) {
  const std::size_t n = ce.size();
  if (cu.size() != n || pc.size() != n || pq.size() != n) {
    throw DimensionError("aesthetics axes differ in length");
  }
  if (n == 0) throw ParameterError("no aesthetics scores");
  ScoreTable table;
  table.verifier_names = {"ce", "cu", "pc", "pq"};
  table.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    table.rows[i] = {{ce[i], Direction::kHigherBetter},
                     {cu[i], Direction::kHigherBetter},
                     {pc[i], Direction::kHigherBetter},
                     {pq[i], Direction::kHigherBetter}};
  }
  return EnsembleScores(table);
}

std::size_t SelectBest(std::span<const Score> scores) {
  CheckUniform(scores);
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (Better(scores[i], scores[best])) best = i;
  }
  return best;
}

}  // namespace srsearch
