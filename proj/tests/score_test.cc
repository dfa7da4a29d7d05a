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
#include <vector>

#include "gtest/gtest.h"
#include "srsearch/errors.h"
#include "srsearch/random.h"

namespace srsearch {
namespace {

constexpr Direction kHigh = Direction::kHigherBetter;
constexpr Direction kLow = Direction::kLowerBetter;

std::vector<Score> Scores(std::vector<double> values, Direction d) {
  std::vector<Score> out;
  for (double v : values) out.push_back({v, d});
  return out;
}

std::vector<double> Values(const std::vector<Score>& scores) {
  std::vector<double> out;
  for (const Score& s : scores) out.push_back(s.value);
  return out;
}

TEST(FractionalRanks, Examples) {
  EXPECT_EQ(FractionalRanks(Scores({0.9, 0.5, 0.7}, kHigh)),
            (std::vector<double>{1, 3, 2}));
  EXPECT_EQ(FractionalRanks(Scores({0.1, 0.2, 0.05}, kLow)),
            (std::vector<double>{2, 3, 1}));
  EXPECT_EQ(FractionalRanks(Scores({0.4, 0.4, 0.1}, kHigh)),
            (std::vector<double>{1.5, 1.5, 3}));
  EXPECT_EQ(FractionalRanks(Scores({1, 1, 1, 1}, kLow)),
            (std::vector<double>{2.5, 2.5, 2.5, 2.5}));
}

TEST(FractionalRanks, MixedDirectionsRejected) {
  std::vector<Score> s = {{1.0, kHigh}, {2.0, kLow}};
  EXPECT_THROW(FractionalRanks(s), ParameterError);
  EXPECT_THROW(FractionalRanks(std::vector<Score>{}), ParameterError);
}

TEST(FractionalRanks, RankSumAndMonotoneInvariance) {
  SplitMix64Stream rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.Next() % 12);
    std::vector<double> v(n);
    // Coarse values so that ties are common.
    for (double& x : v) x = static_cast<double>(rng.Next() % 5);
    const Direction d = rng.Next() % 2 ? kHigh : kLow;
    const std::vector<double> r = FractionalRanks(Scores(v, d));
    EXPECT_DOUBLE_EQ(std::accumulate(r.begin(), r.end(), 0.0), n * (n + 1) / 2.0);
    std::vector<double> t = v;
    for (double& x : t) x = std::exp(x) * 3.0 + 1.0;
    EXPECT_EQ(FractionalRanks(Scores(t, d)), r);
  }
}

TEST(EnsembleScores, Example) {
  // Columns chosen so ranks per column are [1,3,2], [2,3,1], [3,1,2].
  ScoreTable table;
  table.verifier_names = {"a", "b", "c"};
  table.rows = {{{0.9, kHigh}, {0.2, kLow}, {1.0, kLow}},
                {{0.1, kHigh}, {0.3, kLow}, {0.1, kLow}},
                {{0.5, kHigh}, {0.1, kLow}, {0.5, kLow}}};
  const std::vector<Score> e = EnsembleScores(table);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_DOUBLE_EQ(e[0].value, 2.0);
  EXPECT_DOUBLE_EQ(e[1].value, 7.0 / 3.0);
  EXPECT_DOUBLE_EQ(e[2].value, 5.0 / 3.0);
  for (const Score& s : e) EXPECT_EQ(s.direction, kLow);
  EXPECT_EQ(SelectBest(e), 2u);
}

TEST(EnsembleScores, RejectsSingleVerifierAndEmpty) {
  ScoreTable one;
  one.verifier_names = {"a"};
  one.rows = {{{1.0, kHigh}}, {{2.0, kHigh}}};
  EXPECT_THROW(EnsembleScores(one), ParameterError);
  ScoreTable empty;
  empty.verifier_names = {"a", "b"};
  EXPECT_THROW(EnsembleScores(empty), ParameterError);
}

TEST(EnsembleScores, RejectsMixedColumnAndRaggedRows) {
  ScoreTable mixed;
  mixed.verifier_names = {"a", "b"};
  mixed.rows = {{{1.0, kHigh}, {1.0, kLow}}, {{2.0, kLow}, {0.0, kLow}}};
  EXPECT_THROW(EnsembleScores(mixed), ParameterError);
  ScoreTable ragged;
  ragged.verifier_names = {"a", "b"};
  ragged.rows = {{{1.0, kHigh}, {1.0, kLow}}, {{2.0, kHigh}}};
  EXPECT_THROW(EnsembleScores(ragged), DimensionError);
}

TEST(EnsembleScores, IdenticalColumnsFollowSingleOrdering) {
  const std::vector<double> v = {0.3, 0.9, 0.1, 0.5};
  ScoreTable table;
  table.verifier_names = {"a", "b", "c"};
  for (double x : v) table.rows.push_back({{x, kHigh}, {x, kHigh}, {x, kHigh}});
  EXPECT_EQ(Values(EnsembleScores(table)), FractionalRanks(Scores(v, kHigh)));
}

TEST(EnsembleScores, Weights) {
  ScoreTable table;
  table.verifier_names = {"a", "b"};
  table.rows = {{{1.0, kHigh}, {0.0, kHigh}}, {{0.0, kHigh}, {1.0, kHigh}}};
  const double w[] = {3.0, 1.0};
  const std::vector<Score> e = EnsembleScores(table, w);
  EXPECT_DOUBLE_EQ(e[0].value, 1.25);
  EXPECT_DOUBLE_EQ(e[1].value, 1.75);
  const double bad[] = {1.0};
  EXPECT_THROW(EnsembleScores(table, bad), DimensionError);
  const double negative[] = {1.0, -1.0};
  EXPECT_THROW(EnsembleScores(table, negative), ParameterError);
}

TEST(EnsembleScores, PropertiesOnRandomTables) {
  SplitMix64Stream rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.Next() % 10;
    const std::size_t m = 2 + rng.Next() % 4;
    ScoreTable table;
    std::vector<Direction> dirs;
    for (std::size_t j = 0; j < m; ++j) {
      table.verifier_names.push_back("v" + std::to_string(j));
      dirs.push_back(rng.Next() % 2 ? kHigh : kLow);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Score> row;
      for (std::size_t j = 0; j < m; ++j) {
        row.push_back({static_cast<double>(rng.Next() % 4), dirs[j]});
      }
      table.rows.push_back(row);
    }
    const std::vector<Score> e = EnsembleScores(table);
    for (const Score& s : e) {
      ASSERT_GE(s.value, 1.0);
      ASSERT_LE(s.value, static_cast<double>(n));
    }
    // Reverse the candidate order: scores are permuted identically.
    ScoreTable reversed = table;
    std::reverse(reversed.rows.begin(), reversed.rows.end());
    const std::vector<Score> er = EnsembleScores(reversed);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_DOUBLE_EQ(er[i].value, e[n - 1 - i].value);
    }
    const std::size_t best = SelectBest(e);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_LE(e[best].value, e[i].value);
      if (i < best) ASSERT_LT(e[best].value, e[i].value);
    }
  }
}

TEST(EnsembleScores, TwoCandidatesMajorityWinner) {
  SplitMix64Stream rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + rng.Next() % 4;
    ScoreTable table;
    table.rows.resize(2);
    int wins0 = 0;
    int wins1 = 0;
    for (std::size_t j = 0; j < m; ++j) {
      table.verifier_names.push_back("v" + std::to_string(j));
      const double a = static_cast<double>(rng.Next() % 3);
      const double b = static_cast<double>(rng.Next() % 3);
      table.rows[0].push_back({a, kHigh});
      table.rows[1].push_back({b, kHigh});
      wins0 += a > b;
      wins1 += b > a;
    }
    const std::size_t best = SelectBest(EnsembleScores(table));
    EXPECT_EQ(best, wins1 > wins0 ? 1u : 0u);
  }
}

TEST(AggregateAesthetics, Examples) {
  const double one[] = {0.5};
  const std::vector<Score> single = AggregateAesthetics(one, one, one, one);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], (Score{1.0, kLow}));

  const double a_wins[] = {2.0, 1.0};
  const std::vector<Score> unanimous =
      AggregateAesthetics(a_wins, a_wins, a_wins, a_wins);
  EXPECT_EQ(Values(unanimous), (std::vector<double>{1.0, 2.0}));

  const double b_wins[] = {1.0, 2.0};
  const std::vector<Score> split =
      AggregateAesthetics(a_wins, a_wins, b_wins, b_wins);
  EXPECT_EQ(Values(split), (std::vector<double>{1.5, 1.5}));

  const double short_axis[] = {1.0};
  EXPECT_THROW(AggregateAesthetics(a_wins, a_wins, a_wins, short_axis),
               DimensionError);
}

TEST(SelectBest, Examples) {
  EXPECT_EQ(SelectBest(Scores({0.2, 0.8, 0.5}, kHigh)), 1u);
  EXPECT_EQ(SelectBest(Scores({1.7, 1.7, 2.0}, kLow)), 0u);
  EXPECT_EQ(SelectBest(Scores({3.0}, kLow)), 0u);
  EXPECT_THROW(SelectBest(std::vector<Score>{}), ParameterError);
}

TEST(Direction, NamesRoundTrip) {
  EXPECT_EQ(ParseDirection(DirectionName(kHigh)), kHigh);
  EXPECT_EQ(ParseDirection("lower_better"), kLow);
  EXPECT_THROW(ParseDirection("sideways"), ParameterError);
}

}  // namespace
}  // namespace srsearch
