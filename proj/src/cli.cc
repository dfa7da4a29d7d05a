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

#include "srsearch/cli.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srsearch/analysis.h"
#include "srsearch/bridge.h"
#include "srsearch/corpus.h"
#include "srsearch/errors.h"
#include "srsearch/lowpass.h"
#include "srsearch/manifest.h"
#include "srsearch/search.h"
#include "srsearch/stft.h"
#include "srsearch/synthetic_generator.h"
#include "srsearch/verifier_factory.h"
#include "srsearch/verifier_spec.h"
#include "srsearch/wav_io.h"

namespace srsearch {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kCorpusSchemaVersion = 1;
constexpr int kRangeSchemaVersion = 1;

WavCodec ParseCodec(const std::string& name) {
  if (name == "float32") return WavCodec::kFloat32;
  if (name == "pcm16") return WavCodec::kPcm16;
  throw ParameterError("unknown codec '" + name + "'");
}

std::string FormatDouble(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }
}

void WriteJson(const json& j, const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  os << j.dump(2) << "\n";
  if (!os) throw IoError("cannot write " + path.string());
}

// Validation-stage failures map to kExitUsage.
int ValidationError(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << "\n";
  return kExitUsage;
}

// ---------------------------------------------------------------------------
// corpus

struct CorpusArgs {
  int count = 8;
  std::uint64_t seed = 0;
  int rate = 24000;
  double duration = 1.0;
  double cutoff = 4000.0;
  std::string out;
  std::string codec = "float32";
};

int CmdCorpus(const CorpusArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<CorpusItem> items;
  WavCodec codec;
  try {
    if (a.count < 1) throw ParameterError("--count must be positive");
    if (a.rate <= 0) throw ParameterError("--rate must be positive");
    if (!(a.duration > 0.0)) throw ParameterError("--duration must be positive");
    if (!(a.cutoff > 0.0 && a.cutoff < a.rate / 2.0)) {
      throw ParameterError("--cutoff must lie in (0, rate/2)");
    }
    codec = ParseCodec(a.codec);
    EnsureDir(a.out);
    items = MakeTestCorpus(a.count, a.seed, a.rate, a.duration, a.cutoff);
  } catch (const std::exception& e) {
    return ValidationError(err, e);
  }
  const fs::path dir(a.out);
  json doc;
  doc["schema_version"] = kCorpusSchemaVersion;
  doc["seed"] = a.seed;
  doc["params"] = {{"count", a.count},
                   {"sample_rate_hz", a.rate},
                   {"duration_s", a.duration},
                   {"cutoff_hz", a.cutoff},
                   {"codec", a.codec}};
  json list = json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    char hr_name[32];
    char lr_name[32];
    std::snprintf(hr_name, sizeof(hr_name), "hr_%04zu.wav", i);
    std::snprintf(lr_name, sizeof(lr_name), "lr_%04zu.wav", i);
    SaveWav(items[i].hr, dir / hr_name, codec);
    SaveWav(items[i].lr, dir / lr_name, codec);
    list.push_back({{"index", i},
                    {"hr", hr_name},
                    {"lr", lr_name},
                    {"f0_hz", items[i].f0_hz},
                    {"harmonics", items[i].harmonics}});
  }
  doc["items"] = std::move(list);
  WriteJson(doc, dir / "corpus.json");
  out << "items=" << items.size() << " out=" << dir.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::string input;
  std::string verifier;
  std::string algorithm = "random";
  int budget = 120;
  int k = 2;
  double lambda = 0.99;
  std::uint64_t seed = 0;
  std::string neighborhood = "spherical_mix";
  int parallelism = 1;
  std::string out;
  bool keep_all = false;
  std::string generator = "synthetic";
  double cutoff = 4000.0;
  double sigma = 0.5;
  std::string grid = "8x8";
  double rolloff = -3.0;
  std::string bridge_cmd;
  int bridge_timeout_ms = 30000;
  int stft_window = 2048;
  int stft_hop = 512;
  std::string config;
};

struct SearchOptionHandles {
  std::map<std::string, CLI::Option*> by_key;
  bool Given(const std::string& key) const {
    auto it = by_key.find(key);
    return it != by_key.end() && it->second->count() > 0;
  }
};

// Fills fields from the config document wherever the flag was not given.
template <typename T>
void Merge(const SearchOptionHandles& h, const std::string& flag, T& field,
           const json& section, const char* key) {
  if (h.Given(flag) || !section.is_object() || !section.contains(key)) return;
  field = section.at(key).get<T>();
}

void ApplyConfig(const json& cfg, const SearchOptionHandles& h, SearchArgs& a,
                 std::optional<VerifierSpec>& spec_from_config) {
  if (!cfg.is_object()) throw ParameterError("config must be a JSON object");
  Merge(h, "input", a.input, cfg, "input");
  Merge(h, "out", a.out, cfg, "output_dir");
  Merge(h, "keep-all", a.keep_all, cfg, "keep_all");
  Merge(h, "bridge-cmd", a.bridge_cmd, cfg, "bridge_cmd");
  Merge(h, "bridge-timeout-ms", a.bridge_timeout_ms, cfg, "bridge_timeout_ms");
  if (!h.Given("verifier") && cfg.contains("verifier")) {
    const json& v = cfg.at("verifier");
    if (v.is_string()) {
      a.verifier = v.get<std::string>();
    } else {
      spec_from_config = VerifierSpecFromJson(v);
    }
  }
  const json search = cfg.value("search", json::object());
  Merge(h, "algorithm", a.algorithm, search, "algorithm");
  Merge(h, "budget", a.budget, search, "budget_n");
  Merge(h, "k", a.k, search, "neighbors_k");
  Merge(h, "lambda", a.lambda, search, "lambda");
  Merge(h, "seed", a.seed, search, "master_seed");
  Merge(h, "neighborhood", a.neighborhood, search, "neighborhood");
  Merge(h, "parallelism", a.parallelism, search, "parallelism");
  const json gen = cfg.value("generator", json::object());
  Merge(h, "generator", a.generator, gen, "kind");
  Merge(h, "cutoff", a.cutoff, gen, "cutoff_hz");
  Merge(h, "sigma", a.sigma, gen, "sigma");
  Merge(h, "rolloff", a.rolloff, gen, "base_rolloff_db_per_octave");
  if (!h.Given("grid") && gen.is_object() && gen.contains("time_cells") &&
      gen.contains("freq_cells")) {
    a.grid = std::to_string(gen.at("time_cells").get<int>()) + "x" +
             std::to_string(gen.at("freq_cells").get<int>());
  }
  const json stft = cfg.value("stft", json::object());
  Merge(h, "stft-window", a.stft_window, stft, "window_len");
  Merge(h, "stft-hop", a.stft_hop, stft, "hop_len");
}

std::pair<int, int> ParseGrid(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int t = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string rest = text.substr(x + 1);
    const int f = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (t < 1 || f < 1) throw std::invalid_argument(text);
    return {t, f};
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw ParameterError("--grid expects TxF, e.g. 8x8; got '" + text + "'");
}

std::string ArtifactName(std::size_t index) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "candidates/cand_%04zu.wav", index);
  return buf;
}

int CmdSearch(SearchArgs a, const SearchOptionHandles& handles,
              std::ostream& out, std::ostream& err) {
  SearchConfig config;
  VerifierSpec spec;
  StftParams stft;
  AudioBuffer lr;
  SyntheticGenParams gen_params;
  fs::path out_dir;
  std::string bridge_cmd;
  bool use_bridge_generator = false;
  try {
    std::optional<VerifierSpec> spec_from_config;
    if (!a.config.empty()) {
      std::ifstream is(a.config);
      if (!is) throw IoError("cannot read config " + a.config);
      json cfg;
      try {
        cfg = json::parse(is);
      } catch (const json::exception& e) {
        throw FormatError("config " + a.config + ": " + e.what());
      }
      ApplyConfig(cfg, handles, a, spec_from_config);
    }
    if (a.input.empty()) throw ParameterError("--input is required");
    if (a.out.empty()) throw ParameterError("--out is required");
    if (spec_from_config) {
      spec = *spec_from_config;
      ValidateVerifierSpec(spec);
    } else if (!a.verifier.empty()) {
      spec = ParseVerifierSpec(a.verifier);
    } else {
      throw ParameterError("--verifier is required");
    }
    config.algorithm = ParseAlgorithm(a.algorithm);
    config.budget_n = a.budget;
    config.neighbors_k = a.k;
    config.lambda = a.lambda;
    config.master_seed = a.seed;
    config.neighborhood = ParseNeighborhood(a.neighborhood);
    config.parallelism = a.parallelism;
    CheckSearchConfig(config);
    stft.window_len = a.stft_window;
    stft.hop_len = a.stft_hop;
    CheckStftParams(stft);
    if (a.generator == "bridge") {
      use_bridge_generator = true;
    } else if (a.generator != "synthetic") {
      throw ParameterError("--generator must be synthetic or bridge");
    }
    if (!fs::is_regular_file(a.input)) {
      throw IoError("input file not found: " + a.input);
    }
    lr = LoadWav(a.input);
    if (!use_bridge_generator) {
      gen_params.cutoff_hz = a.cutoff;
      gen_params.sigma = a.sigma;
      gen_params.base_rolloff_db_per_octave = a.rolloff;
      std::tie(gen_params.time_cells, gen_params.freq_cells) = ParseGrid(a.grid);
      gen_params.stft = stft;
      if (!(a.cutoff > 0.0 && a.cutoff < lr.sample_rate_hz / 2.0)) {
        throw ParameterError("--cutoff must lie in (0, rate/2)");
      }
      if (!(a.sigma >= 0.0)) throw ParameterError("--sigma must be >= 0");
    }
    if (a.bridge_timeout_ms <= 0) {
      throw ParameterError("--bridge-timeout-ms must be positive");
    }
    bridge_cmd = a.bridge_cmd;
    if (bridge_cmd.empty()) {
      if (const char* env = std::getenv(kBridgeCommandEnv)) bridge_cmd = env;
    }
    out_dir = a.out;
    EnsureDir(out_dir);
  } catch (const BridgeUnavailableError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBridgeUnavailable;
  } catch (const std::exception& e) {
    return ValidationError(err, e);
  }

  std::shared_ptr<BridgeClient> bridge;
  std::unique_ptr<Generator> generator;
  std::optional<CandidateScorer> scorer;
  try {
    if (use_bridge_generator || NeedsBridge(spec)) {
      if (bridge_cmd.empty()) {
        throw BridgeUnavailableError(
            std::string("no bridge configured; set --bridge-cmd or ") +
            kBridgeCommandEnv);
      }
      BridgeOptions options;
      options.handshake_timeout = std::chrono::milliseconds(a.bridge_timeout_ms);
      err << "launching bridge: " << bridge_cmd << "\n";
      bridge = BridgeClient::Launch(bridge_cmd, options);
    }
    if (use_bridge_generator) {
      generator = std::make_unique<BridgeGenerator>(bridge, fs::absolute(a.input));
    } else {
      generator = std::make_unique<SyntheticGenerator>(gen_params, lr.sample_rate_hz);
    }
    scorer = BuildScorer(spec, VerifierContext{stft, bridge});
  } catch (const BridgeUnavailableError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBridgeUnavailable;
  } catch (const std::exception& e) {
    return ValidationError(err, e);
  }

  SearchResult result;
  try {
    err << "search: algorithm=" << AlgorithmName(config.algorithm)
        << " budget=" << config.budget_n << " parallelism=" << config.parallelism
        << "\n";
    SearchOptions options;
    options.keep_candidates = a.keep_all;
    result = RunSearch(lr, *generator, *scorer, config, options);
    result.manifest.verifier_specs = {spec};
    if (a.keep_all) {
      EnsureDir(out_dir / "candidates");
      for (const auto& [index, audio] : result.generated) {
        SaveWav(audio, out_dir / ArtifactName(index), WavCodec::kFloat32);
      }
      for (CandidateRecord& rec : result.manifest.candidates) {
        rec.artifact_path = ArtifactName(rec.source_index);
      }
    }
    SaveWav(result.selected_audio, out_dir / "selected.wav", WavCodec::kFloat32);
    WriteManifest(result.manifest, out_dir / "manifest.json");
    if (bridge) bridge->Close();
  } catch (const CandidateError& e) {
    err << "error: candidate_index=" << e.index() << " " << e.what() << "\n";
    return kExitRuntimeFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeFailure;
  }

  const RunManifest& m = result.manifest;
  const CandidateRecord& best = m.candidates[m.selected_index];
  const Score& s = best.scores.at(m.selection_score);
  out << "selected_index=" << m.selected_index
      << " score=" << FormatDouble(s.value) << " verifier=" << m.selection_score
      << " direction=" << DirectionName(s.direction)
      << " candidates=" << m.candidates.size() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string candidates;
  std::string manifest;
  std::string out;
  double clip_percentile = kDefaultClipPercentile;
  double epsilon = kUncertaintyEpsilon;
  std::string variance_domain = "linear";
  int stft_window = 2048;
  int stft_hop = 512;
};

std::vector<fs::path> CandidatesFromDir(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw IoError("candidate directory not found: " + dir.string());
  }
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wav") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::vector<fs::path> CandidatesFromManifest(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot read manifest " + path.string());
  json j;
  try {
    j = json::parse(is);
  } catch (const json::exception& e) {
    throw FormatError("manifest " + path.string() + ": " + e.what());
  }
  const RunManifest m = ManifestFromJson(j);
  std::vector<fs::path> paths;
  for (const CandidateRecord& rec : m.candidates) {
    if (rec.reused || !rec.artifact_path) continue;
    const fs::path p = path.parent_path() / *rec.artifact_path;
    if (std::find(paths.begin(), paths.end(), p) == paths.end()) {
      paths.push_back(p);
    }
  }
  return paths;
}

int CmdAnalyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  CandidateSet set;
  std::vector<fs::path> paths;
  StftParams stft;
  VarianceDomain domain = VarianceDomain::kLinear;
  std::size_t num_samples = 0;
  int rate = 0;
  try {
    if (a.candidates.empty() == a.manifest.empty()) {
      throw ParameterError("give exactly one of --candidates or --manifest");
    }
    if (a.out.empty()) throw ParameterError("--out is required");
    if (!(a.clip_percentile > 0.0 && a.clip_percentile <= 100.0)) {
      throw ParameterError("--clip-percentile must lie in (0, 100]");
    }
    if (!(a.epsilon > 0.0)) throw ParameterError("--epsilon must be positive");
    if (a.variance_domain == "log") {
      domain = VarianceDomain::kLog;
    } else if (a.variance_domain != "linear") {
      throw ParameterError("--variance-domain must be linear or log");
    }
    stft.window_len = a.stft_window;
    stft.hop_len = a.stft_hop;
    CheckStftParams(stft);
    paths = a.candidates.empty() ? CandidatesFromManifest(a.manifest)
                                 : CandidatesFromDir(a.candidates);
    if (paths.size() < 2) {
      throw ParameterError("analysis needs at least 2 candidates, found " +
                           std::to_string(paths.size()));
    }
    std::vector<AudioBuffer> audio;
    for (const fs::path& p : paths) audio.push_back(LoadWav(p));
    rate = audio.front().sample_rate_hz;
    num_samples = audio.front().size();
    for (const AudioBuffer& b : audio) {
      if (b.sample_rate_hz != rate) {
        throw DimensionError("candidates have different sample rates");
      }
      num_samples = std::min(num_samples, b.size());
    }
    for (AudioBuffer& b : audio) {
      b.samples.resize(num_samples);
      set.spectrograms.push_back(Stft(b, stft));
    }
    EnsureDir(a.out);
  } catch (const std::exception& e) {
    return ValidationError(err, e);
  }

  try {
    const double variance = SearchSpaceVariance(set);
    const UncertaintyMap map = ComputeUncertaintyMap(set, a.epsilon, domain);
    const UncertaintyMap clipped = ClipForRender(map, a.clip_percentile);
    const fs::path dir(a.out);
    json range;
    range["schema_version"] = kRangeSchemaVersion;
    range["search_space_variance"] = variance;
    range["n"] = set.size();
    range["sample_rate_hz"] = rate;
    range["num_samples"] = num_samples;
    range["stft"] = {{"window_len", stft.window_len},
                     {"hop_len", stft.hop_len},
                     {"window", "hann_periodic"}};
    range["variance_domain"] = a.variance_domain;
    json sources = json::array();
    for (const fs::path& p : paths) sources.push_back(p.string());
    range["sources"] = std::move(sources);
    WriteJson(range, dir / "range.json");
    ExportMap(clipped, dir / "uncertainty.pgm", MapFormat::kPgm);
    ExportMap(clipped, dir / "uncertainty.csv", MapFormat::kCsv);
    out << "search_space_variance=" << FormatDouble(variance)
        << " n=" << set.size() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lowres

struct LowresArgs {
  std::string input;
  double cutoff = 4000.0;
  std::string output;
  std::string codec = "float32";
};

int CmdLowres(const LowresArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const WavCodec codec = ParseCodec(a.codec);
    if (!fs::is_regular_file(a.input)) {
      throw IoError("input file not found: " + a.input);
    }
    const AudioBuffer hr = LoadWav(a.input);
    const AudioBuffer lr = MakeLowres(hr, a.cutoff);
    SaveWav(lr, a.output, codec);
  } catch (const std::exception& e) {
    return ValidationError(err, e);
  }
  out << "wrote " << a.output << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Inference-time search for audio super-resolution", "srsearch"};
  app.require_subcommand(1);

  CorpusArgs corpus;
  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "Write a deterministic HR/LR test corpus");
  corpus_cmd->add_option("--count", corpus.count, "Number of items")
      ->capture_default_str();
  corpus_cmd->add_option("--seed", corpus.seed, "Master seed")
      ->capture_default_str();
  corpus_cmd->add_option("--rate", corpus.rate, "Sample rate in Hz")
      ->capture_default_str();
  corpus_cmd->add_option("--duration", corpus.duration, "Seconds per item")
      ->capture_default_str();
  corpus_cmd->add_option("--cutoff", corpus.cutoff, "Low-pass cutoff in Hz")
      ->capture_default_str();
  corpus_cmd->add_option("--out", corpus.out, "Output directory")->required();
  corpus_cmd->add_option("--codec", corpus.codec, "float32 or pcm16")
      ->capture_default_str();

  SearchArgs search;
  search.parallelism =
      std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  SearchOptionHandles handles;
  CLI::App* search_cmd =
      app.add_subcommand("search", "Search the latent noise space");
  auto& h = handles.by_key;
  h["input"] = search_cmd->add_option("--input", search.input, "LR input WAV");
  h["verifier"] = search_cmd->add_option(
      "--verifier", search.verifier,
      "Verifier spec: lsd:REF.wav, extern:NAME[?text=...], ensemble(a,b,...)");
  h["algorithm"] = search_cmd
                       ->add_option("--algorithm", search.algorithm,
                                    "random or zero_order")
                       ->capture_default_str();
  h["budget"] = search_cmd->add_option("--budget", search.budget, "Budget N")
                    ->capture_default_str();
  h["k"] = search_cmd->add_option("--k", search.k, "Neighbors per round")
               ->capture_default_str();
  h["lambda"] =
      search_cmd->add_option("--lambda", search.lambda, "Search distance")
          ->capture_default_str();
  h["seed"] = search_cmd->add_option("--seed", search.seed, "Master seed")
                  ->capture_default_str();
  h["neighborhood"] = search_cmd
                          ->add_option("--neighborhood", search.neighborhood,
                                       "spherical_mix or euclidean_shell")
                          ->capture_default_str();
  h["parallelism"] = search_cmd
                         ->add_option("--parallelism", search.parallelism,
                                      "Worker threads")
                         ->capture_default_str();
  h["out"] = search_cmd->add_option("--out", search.out, "Output directory");
  h["keep-all"] =
      search_cmd->add_flag("--keep-all", search.keep_all, "Keep every candidate");
  h["generator"] = search_cmd
                       ->add_option("--generator", search.generator,
                                    "synthetic or bridge")
                       ->capture_default_str();
  h["cutoff"] = search_cmd
                    ->add_option("--cutoff", search.cutoff,
                                 "Synthetic generator cutoff in Hz")
                    ->capture_default_str();
  h["sigma"] = search_cmd
                   ->add_option("--sigma", search.sigma,
                                "Synthetic generator envelope noise scale")
                   ->capture_default_str();
  h["grid"] = search_cmd
                  ->add_option("--grid", search.grid,
                               "Synthetic generator noise grid, TxF")
                  ->capture_default_str();
  h["rolloff"] = search_cmd
                     ->add_option("--rolloff", search.rolloff,
                                  "Synthetic generator rolloff in dB/octave")
                     ->capture_default_str();
  h["bridge-cmd"] = search_cmd->add_option(
      "--bridge-cmd", search.bridge_cmd,
      std::string("Bridge launch command (default: $") + kBridgeCommandEnv + ")");
  h["bridge-timeout-ms"] = search_cmd
                               ->add_option("--bridge-timeout-ms",
                                            search.bridge_timeout_ms,
                                            "Bridge handshake timeout")
                               ->capture_default_str();
  h["stft-window"] =
      search_cmd->add_option("--stft-window", search.stft_window)
          ->capture_default_str();
  h["stft-hop"] = search_cmd->add_option("--stft-hop", search.stft_hop)
                      ->capture_default_str();
  search_cmd->add_option("--config", search.config,
                         "JSON run config; explicit flags take precedence");

  AnalyzeArgs analyze;
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Search-space range and uncertainty map of candidates");
  auto* cand_opt = analyze_cmd->add_option("--candidates", analyze.candidates,
                                           "Directory of candidate WAVs");
  auto* man_opt = analyze_cmd->add_option("--manifest", analyze.manifest,
                                          "Manifest with kept candidates");
  cand_opt->excludes(man_opt);
  analyze_cmd->add_option("--out", analyze.out, "Output directory")->required();
  analyze_cmd->add_option("--clip-percentile", analyze.clip_percentile)
      ->capture_default_str();
  analyze_cmd->add_option("--epsilon", analyze.epsilon)->capture_default_str();
  analyze_cmd->add_option("--variance-domain", analyze.variance_domain,
                          "linear or log")
      ->capture_default_str();
  analyze_cmd->add_option("--stft-window", analyze.stft_window)
      ->capture_default_str();
  analyze_cmd->add_option("--stft-hop", analyze.stft_hop)->capture_default_str();

  LowresArgs lowres;
  CLI::App* lowres_cmd =
      app.add_subcommand("lowres", "Low-pass a WAV to simulate LR input");
  lowres_cmd->add_option("input", lowres.input, "Input WAV")->required();
  lowres_cmd->add_option("--cutoff", lowres.cutoff, "Cutoff in Hz")
      ->capture_default_str();
  lowres_cmd->add_option("-o,--output", lowres.output, "Output WAV")
      ->required();
  lowres_cmd->add_option("--codec", lowres.codec, "float32 or pcm16")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    CLI::App* sub = app.get_subcommands().empty() ? &app
                                                  : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  if (corpus_cmd->parsed()) return CmdCorpus(corpus, out, err);
  if (search_cmd->parsed()) return CmdSearch(search, handles, out, err);
  if (analyze_cmd->parsed()) return CmdAnalyze(analyze, out, err);
  return CmdLowres(lowres, out, err);
}

}  // namespace srsearch
