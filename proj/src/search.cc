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

#include "srsearch/search.h"

#include <chrono>
#include <cmath>
#include <exception>
#include <string>
#include <utility>

#include "srsearch/errors.h"
#include "srsearch/parallel.h"

namespace srsearch {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ElapsedMs(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               since)
      .count();
}

// A generated (or, for reused pivots, remembered) candidate.
struct Evaluated {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  LatentNoise noise;
  AudioBuffer audio;
  std::vector<Score> raw;
};

class Evaluator {
 public:
  Evaluator(const AudioBuffer& lr, const Generator& generator,
            const CandidateScorer& scorer, int parallelism)
      : lr_(lr),
        generator_(generator),
        scorer_(scorer),
        parallelism_(parallelism) {}

  // Generates and scores `batch` in place; noise and seed must be set.
  void Run(std::vector<Evaluated>& batch) {
    std::vector<std::int64_t> gen_us(batch.size(), 0);
    std::vector<std::int64_t> score_us(batch.size(), 0);
    ParallelFor(batch.size(), parallelism_, [&](std::size_t i) {
      Evaluated& e = batch[i];
      try {
        const auto t0 = Clock::now();
        e.audio = generator_.Generate(lr_, e.noise);
        CheckAudio(e.audio);
        const auto t1 = Clock::now();
        e.raw = scorer_.EvaluateRaw(e.audio);
        const auto t2 = Clock::now();
        gen_us[i] = std::chrono::duration_cast<std::chrono::microseconds>(
                        t1 - t0).count();
        score_us[i] = std::chrono::duration_cast<std::chrono::microseconds>(
                          t2 - t1).count();
      } catch (const CandidateError&) {
        throw;
      } catch (const std::exception& ex) {
        throw CandidateError(e.index, ex.what());
      }
    });
    calls_ += batch.size();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      generate_us_ += gen_us[i];
      score_us_ += score_us[i];
    }
  }

  std::size_t calls() const { return calls_; }
  std::int64_t generate_ms() const { return generate_us_ / 1000; }
  std::int64_t score_ms() const { return score_us_ / 1000; }

 private:
  const AudioBuffer& lr_;
  const Generator& generator_;
  const CandidateScorer& scorer_;
  int parallelism_;
  std::size_t calls_ = 0;
  std::int64_t generate_us_ = 0;
  std::int64_t score_us_ = 0;
};

std::size_t CheckedNoiseDim(const Generator& generator) {
  const GeneratorInfo info = generator.Info();
  if (info.noise_dim < 1) throw ParameterError("generator noise_dim must be >= 1");
  return static_cast<std::size_t>(info.noise_dim);
}

CandidateRecord MakeRecord(const Evaluated& e, int round,
                           const CombinedScore& combined) {
  CandidateRecord r;
  r.index = e.index;
  r.round = round;
  r.noise_seed = e.seed;
  r.noise_digest = NoiseDigest(e.noise);
  r.source_index = e.index;
  r.scores = combined.scores;
  r.ranks = combined.ranks;
  return r;
}

void FinishManifest(RunManifest& m, const Generator& generator,
                    const CandidateScorer& scorer, const SearchConfig& config,
                    const Evaluator& evaluator, Clock::time_point start) {
  m.config = config;
  m.generator_info = generator.Info();
  m.selection_score = scorer.name();
  m.generator_calls = evaluator.calls();
  m.wall_times_ms["generate"] = evaluator.generate_ms();
  m.wall_times_ms["score"] = evaluator.score_ms();
  m.wall_times_ms["total"] = ElapsedMs(start);
}

}  // namespace

std::string_view AlgorithmName(SearchAlgorithm algorithm) {
  return algorithm == SearchAlgorithm::kRandom ? "random" : "zero_order";
}

SearchAlgorithm ParseAlgorithm(std::string_view name) {
  if (name == "random") return SearchAlgorithm::kRandom;
  if (name == "zero_order" || name == "zero-order") {
    return SearchAlgorithm::kZeroOrder;
  }
  throw ParameterError("unknown search algorithm: " + std::string(name));
}

std::string_view NeighborhoodName(Neighborhood neighborhood) {
  return neighborhood == Neighborhood::kSphericalMix ? "spherical_mix"
                                                     : "euclidean_shell";
}

Neighborhood ParseNeighborhood(std::string_view name) {
  if (name == "spherical_mix") return Neighborhood::kSphericalMix;
  if (name == "euclidean_shell") return Neighborhood::kEuclideanShell;
  throw ParameterError("unknown neighborhood: " + std::string(name));
}

void CheckSearchConfig(const SearchConfig& config) {
  if (config.budget_n < 1) throw ParameterError("budget_n must be >= 1");
  if (config.parallelism < 1) throw ParameterError("parallelism must be >= 1");
  if (!(config.lambda >= 0.0 && config.lambda <= 1.0)) {
    throw ParameterError("lambda must lie in [0, 1]");
  }
  if (config.algorithm == SearchAlgorithm::kZeroOrder) {
    if (config.neighbors_k < 1) throw ParameterError("neighbors_k must be >= 1");
    if (config.budget_n < config.neighbors_k) {
      throw ParameterError("budget_n must be >= neighbors_k");
    }
  }
}

LatentNoise PerturbNoise(const LatentNoise& pivot, double lambda,
                         std::uint64_t seed, Neighborhood neighborhood) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ParameterError("lambda must lie in [0, 1]");
  }
  const LatentNoise fresh = SampleStandardNoise(pivot.dim(), seed);
  LatentNoise out;
  out.values.resize(pivot.dim());
  if (neighborhood == Neighborhood::kSphericalMix) {
    if (lambda == 1.0) return pivot;
    const double spread = std::sqrt(1.0 - lambda * lambda);
    for (std::size_t i = 0; i < pivot.dim(); ++i) {
      out.values[i] = lambda * pivot.values[i] + spread * fresh.values[i];
    }
  } else {
    double norm = 0.0;
    for (const double v : fresh.values) norm += v * v;
    norm = std::sqrt(norm);
    const double step =
        norm > 0.0 ? lambda * std::sqrt(static_cast<double>(pivot.dim())) / norm
                   : 0.0;
    for (std::size_t i = 0; i < pivot.dim(); ++i) {
      out.values[i] = pivot.values[i] + step * fresh.values[i];
    }
  }
  return out;
}

SearchResult RandomSearch(const AudioBuffer& lr, const Generator& generator,
                          const CandidateScorer& scorer,
                          const SearchConfig& config,
                          const SearchOptions& options) {
  CheckSearchConfig(config);
  if (config.algorithm != SearchAlgorithm::kRandom) {
    throw ParameterError("RandomSearch needs algorithm = random");
  }
  const auto start = Clock::now();
  const std::size_t dim = CheckedNoiseDim(generator);
  const auto n = static_cast<std::size_t>(config.budget_n);

  std::vector<Evaluated> batch(n);
  for (std::size_t i = 0; i < n; ++i) {
    batch[i].index = i;
    batch[i].seed = DeriveSeed(config.master_seed, i);
    batch[i].noise = SampleStandardNoise(dim, batch[i].seed);
  }
  Evaluator evaluator(lr, generator, scorer, config.parallelism);
  evaluator.Run(batch);

  std::vector<std::vector<Score>> raw;
  raw.reserve(n);
  for (const Evaluated& e : batch) raw.push_back(e.raw);
  const std::vector<CombinedScore> combined = scorer.Combine(raw);
  std::vector<Score> finals;
  for (const CombinedScore& c : combined) finals.push_back(c.final);
  const std::size_t best = SelectBest(finals);

  SearchResult result;
  RunManifest& m = result.manifest;
  for (std::size_t i = 0; i < n; ++i) {
    m.candidates.push_back(MakeRecord(batch[i], 0, combined[i]));
  }
  m.candidates[best].selected = true;
  m.selected_index = best;
  result.selected_audio = batch[best].audio;
  if (options.keep_candidates) {
    for (Evaluated& e : batch) {
      result.generated.emplace_back(e.index, std::move(e.audio));
    }
  }
  FinishManifest(m, generator, scorer, config, evaluator, start);
  return result;
}

SearchResult ZeroOrderSearch(const AudioBuffer& lr, const Generator& generator,
                             const CandidateScorer& scorer,
                             const SearchConfig& config,
                             const SearchOptions& options) {
  CheckSearchConfig(config);
  if (config.algorithm != SearchAlgorithm::kZeroOrder) {
    throw ParameterError("ZeroOrderSearch needs algorithm = zero_order");
  }
  const auto start = Clock::now();
  const std::size_t dim = CheckedNoiseDim(generator);
  const auto k = static_cast<std::size_t>(config.neighbors_k);
  const auto rounds = static_cast<std::size_t>(config.rounds());
  Evaluator evaluator(lr, generator, scorer, config.parallelism);

  SearchResult result;
  RunManifest& m = result.manifest;

  std::vector<Evaluated> first(1);
  first[0].index = 0;
  first[0].seed = DeriveSeed(config.master_seed, 0);
  first[0].noise = SampleStandardNoise(dim, first[0].seed);
  evaluator.Run(first);
  Evaluated pivot = std::move(first[0]);
  if (options.keep_candidates) result.generated.emplace_back(0, pivot.audio);

  std::size_t winner_record = 0;
  for (std::size_t r = 0; r < rounds; ++r) {
    std::vector<Evaluated> neighbors(k - 1);
    for (std::size_t j = 1; j < k; ++j) {
      Evaluated& e = neighbors[j - 1];
      e.index = r * k + j;
      e.seed = DeriveSeed(config.master_seed, e.index);
      e.noise = PerturbNoise(pivot.noise, config.lambda, e.seed,
                             config.neighborhood);
    }
    evaluator.Run(neighbors);

    // The pivot sits in slot 0 so ties keep it.
    std::vector<std::vector<Score>> raw;
    raw.push_back(pivot.raw);
    for (const Evaluated& e : neighbors) raw.push_back(e.raw);
    const std::vector<CombinedScore> combined = scorer.Combine(raw);
    std::vector<Score> finals;
    for (const CombinedScore& c : combined) finals.push_back(c.final);
    const std::size_t best = SelectBest(finals);

    const std::size_t round_base = m.candidates.size();
    CandidateRecord pivot_record = MakeRecord(pivot, static_cast<int>(r),
                                              combined[0]);
    pivot_record.index = r * k;
    pivot_record.reused = r > 0;
    m.candidates.push_back(std::move(pivot_record));
    for (std::size_t j = 0; j < neighbors.size(); ++j) {
      m.candidates.push_back(
          MakeRecord(neighbors[j], static_cast<int>(r), combined[j + 1]));
    }
    winner_record = round_base + best;

    if (options.keep_candidates) {
      for (const Evaluated& e : neighbors) {
        result.generated.emplace_back(e.index, e.audio);
      }
    }
    if (best > 0) pivot = std::move(neighbors[best - 1]);
  }

  m.candidates[winner_record].selected = true;
  m.selected_index = winner_record;
  // Elitism makes the final pivot the best candidate seen; its output is
  // already cached, so no extra generator call is spent.
  result.selected_audio = pivot.audio;
  FinishManifest(m, generator, scorer, config, evaluator, start);
  return result;
}

SearchResult RunSearch(const AudioBuffer& lr, const Generator& generator,
                       const CandidateScorer& scorer, const SearchConfig& config,
                       const SearchOptions& options) {
  return config.algorithm == SearchAlgorithm::kRandom
             ? RandomSearch(lr, generator, scorer, config, options)
             : ZeroOrderSearch(lr, generator, scorer, config, options);
}

}  // namespace srsearch
