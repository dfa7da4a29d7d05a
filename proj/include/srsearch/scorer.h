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

#ifndef SRSEARCH_SCORER_H_
#define SRSEARCH_SCORER_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "srsearch/audio_buffer.h"
#include "srsearch/score.h"
#include "srsearch/verifier.h"

namespace srsearch {

// One column of the ranking table: a single verifier, or the four aesthetics
// axes folded into one lower-better mean-rank column.
struct ScoreColumn {
  std::string name;
  std::vector<std::shared_ptr<const Verifier>> axes;

  bool is_aesthetics() const { return axes.size() == 4; }
};

// Per-candidate outcome of scoring one candidate set.
struct CombinedScore {
  Score final;
  // Raw verifier outputs plus derived columns, keyed by name.
  std::map<std::string, Score> scores;
  // Fractional rank within the scored set, per column and for the final
  // score.
  std::map<std::string, double> ranks;
};

// What the search engine scores with. Raw verifier calls happen per candidate
// (and may run in parallel); rank-based aggregation happens over whichever
// candidate set Combine is handed.
class CandidateScorer {
 public:
  static CandidateScorer Single(std::shared_ptr<const Verifier> verifier);
  static CandidateScorer Aesthetics(std::string name,
                                    std::vector<std::shared_ptr<const Verifier>> axes);
  static CandidateScorer Ensemble(std::string name,
                                  std::vector<ScoreColumn> columns,
                                  std::vector<double> weights = {});

  const std::string& name() const { return name_; }
  Direction direction() const;
  bool is_ensemble() const { return columns_.size() > 1; }
  const std::vector<ScoreColumn>& columns() const { return columns_; }

  // Every raw verifier in evaluation order.
  std::size_t num_raw() const { return raw_.size(); }

  std::vector<Score> EvaluateRaw(const AudioBuffer& candidate) const;
  std::vector<CombinedScore> Combine(
      const std::vector<std::vector<Score>>& raw_rows) const;

 private:
  CandidateScorer() = default;
  void Index();

  std::string name_;
  std::vector<ScoreColumn> columns_;
  std::vector<double> weights_;
  std::vector<const Verifier*> raw_;
  // First raw index of each column.
  std::vector<std::size_t> column_offset_;
};

}  // namespace srsearch

#endif  // SRSEARCH_SCORER_H_
