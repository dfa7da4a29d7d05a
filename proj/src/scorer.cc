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

#include "srsearch/scorer.h"

#include <cmath>
#include <set>

#include "srsearch/errors.h"

namespace srsearch {

CandidateScorer CandidateScorer::Single(
    std::shared_ptr<const Verifier> verifier) {
  if (!verifier) throw ParameterError("null verifier");
  CandidateScorer scorer;
  scorer.name_ = verifier->name();
  scorer.columns_.push_back({verifier->name(), {std::move(verifier)}});
  scorer.Index();
  return scorer;
}

CandidateScorer CandidateScorer::Aesthetics(
    std::string name, std::vector<std::shared_ptr<const Verifier>> axes) {
  if (axes.size() != 4) {
    throw ParameterError("aesthetics needs exactly four axes");
  }
  CandidateScorer scorer;
  scorer.name_ = name;
  scorer.columns_.push_back({std::move(name), std::move(axes)});
  scorer.Index();
  return scorer;
}

CandidateScorer CandidateScorer::Ensemble(std::string name,
                                          std::vector<ScoreColumn> columns,
                                          std::vector<double> weights) {
  if (columns.size() < 2) {
    throw ParameterError("an ensemble needs at least two verifiers");
  }
  if (!weights.empty() && weights.size() != columns.size()) {
    throw ParameterError("ensemble weights must match member count");
  }
  CandidateScorer scorer;
  scorer.name_ = std::move(name);
  scorer.columns_ = std::move(columns);
  scorer.weights_ = std::move(weights);
  scorer.Index();
  return scorer;
}

void CandidateScorer::Index() {
  std::set<std::string> names;
  for (const ScoreColumn& column : columns_) {
    if (column.axes.size() != 1 && column.axes.size() != 4) {
      throw ParameterError("column '" + column.name +
                           "' must hold one verifier or four aesthetics axes");
    }
    column_offset_.push_back(raw_.size());
    if (!names.insert(column.name).second) {
      throw ParameterError("duplicate verifier name '" + column.name + "'");
    }
    for (const auto& axis : column.axes) {
      if (!axis) throw ParameterError("null verifier in column " + column.name);
      if (column.is_aesthetics() && !names.insert(axis->name()).second) {
        throw ParameterError("duplicate verifier name '" + axis->name() + "'");
      }
      if (column.is_aesthetics() &&
          axis->direction() != Direction::kHigherBetter) {
        throw ParameterError("aesthetics axes must be higher_better");
      }
      raw_.push_back(axis.get());
    }
  }
  if (is_ensemble() && names.count(name_)) {
    throw ParameterError("ensemble name collides with a member name");
  }
}

Direction CandidateScorer::direction() const {
  if (is_ensemble() || columns_.front().is_aesthetics()) {
    return Direction::kLowerBetter;
  }
  return raw_.front()->direction();
}

std::vector<Score> CandidateScorer::EvaluateRaw(
    const AudioBuffer& candidate) const {
  std::vector<Score> out;
  out.reserve(raw_.size());
  for (const Verifier* v : raw_) {
    Score s = v->Evaluate(candidate);
    if (!std::isfinite(s.value)) {
      throw std::runtime_error("verifier '" + v->name() +
                               "' returned a non-finite score");
    }
    s.direction = v->direction();
    out.push_back(s);
  }
  return out;
}

std::vector<CombinedScore> CandidateScorer::Combine(
    const std::vector<std::vector<Score>>& raw_rows) const {
  const std::size_t n = raw_rows.size();
  if (n == 0) throw ParameterError("no candidates to combine");
  for (const auto& row : raw_rows) {
    if (row.size() != raw_.size()) {
      throw DimensionError("raw score row has the wrong width");
    }
  }

  std::vector<CombinedScore> out(n);
  ScoreTable table;
  table.rows.assign(n, {});
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const ScoreColumn& column = columns_[c];
    const std::size_t base = column_offset_[c];
    std::vector<Score> column_scores(n);
    if (column.is_aesthetics()) {
      std::vector<double> axes[4];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < 4; ++a) {
          const Score& s = raw_rows[i][base + a];
          axes[a].push_back(s.value);
          out[i].scores[column.axes[a]->name()] = s;
        }
      }
      column_scores = AggregateAesthetics(axes[0], axes[1], axes[2], axes[3]);
    } else {
      for (std::size_t i = 0; i < n; ++i) column_scores[i] = raw_rows[i][base];
    }
    const std::vector<double> ranks = FractionalRanks(column_scores);
    table.verifier_names.push_back(column.name);
    for (std::size_t i = 0; i < n; ++i) {
      out[i].scores[column.name] = column_scores[i];
      out[i].ranks[column.name] = ranks[i];
      table.rows[i].push_back(column_scores[i]);
    }
  }

  if (is_ensemble()) {
    const std::vector<Score> ensemble = EnsembleScores(table, weights_);
    const std::vector<double> ranks = FractionalRanks(ensemble);
    for (std::size_t i = 0; i < n; ++i) {
      out[i].final = ensemble[i];
      out[i].scores[name_] = ensemble[i];
      out[i].ranks[name_] = ranks[i];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i].final = table.rows[i][0];
  }
  return out;
}

}  // namespace srsearch
