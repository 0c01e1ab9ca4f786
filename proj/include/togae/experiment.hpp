// Copyright 2026 The togae Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "togae/eval.hpp"
#include "togae/ingest.hpp"
#include "togae/synthgen.hpp"
#include "togae/train.hpp"

namespace togae {

struct SyntheticDataset {
  std::filesystem::path source;  // raw edge list of G_0
  RewireMode mode = RewireMode::kConfiguration;
  double p = 0.25;
  std::size_t steps = 10;
  std::size_t max_attempts = 100;
};

struct EmpiricalDataset {
  std::filesystem::path edges;
  std::filesystem::path dates;
  std::size_t k = 6;
  PartitionMode partition = PartitionMode::kCumulative;
};

enum class Protocol { kEvolution, kFuture };
std::string to_string(Protocol protocol);
Protocol protocol_from_string(const std::string& name);

struct EvalSpec {
  Protocol protocol = Protocol::kEvolution;
  double test_frac = 0.10;
  std::size_t repeats = 10;
  std::size_t positive_cap = 100000;
  std::size_t threads = 1;  // repeats evaluated concurrently
};

struct ExperimentConfig {
  std::variant<std::monostate, SyntheticDataset, EmpiricalDataset> dataset;
  // Where generate/ingest write the series and train/eval read it. Defaults
  // to <output_dir>/series.
  std::optional<std::filesystem::path> series_dir;
  TrainConfig train;  // model kind and offset flag live here
  EvalSpec eval;
  std::optional<std::uint64_t> seed;
  std::filesystem::path output_dir = "out";

  std::filesystem::path resolved_series_dir() const;
  // Throws InputError when no seed was given.
  std::uint64_t required_seed() const;
  // Fully resolved config, echoed into every output file.
  nlohmann::json to_json() const;
};

// Throws InputError on unknown keys, wrong types or out-of-range values.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct ConfigOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::size_t> block_size;
  std::optional<std::size_t> threads;
};
void apply_overrides(ExperimentConfig& cfg, const ConfigOverrides& overrides);

// "GAE", "GVAE", "TO-GAE" or "TO-GVAE".
std::string model_label(ModelKind kind, bool offset);

// Trains on G_0 -> G_{offset_delta} (offset) or G_0 -> G_0 (baseline).
TrainResult train_on_series(const TemporalGraphSeries& series, const TrainConfig& cfg);

// `repeats` independent evaluations, repeat r drawing its negatives and
// splits from stream (seed, r), aggregated.
MetricReport evaluate_repeats(const Model& model, const TemporalGraphSeries& series,
                              const EvalSpec& spec, std::uint64_t seed);

// Each command writes into cfg.output_dir (created when missing) and returns
// the main artefact path.
std::filesystem::path cmd_generate(const ExperimentConfig& cfg);
std::filesystem::path cmd_ingest(const ExperimentConfig& cfg);
// Writes checkpoint.json and loss.csv; returns the checkpoint path.
std::filesystem::path cmd_train(const ExperimentConfig& cfg);
// Writes report.csv and report.json.
MetricReport cmd_eval(const ExperimentConfig& cfg, const std::filesystem::path& checkpoint);

// Tables that cmd_reproduce knows: hepph_evolution, hepph_future, and the
// synthetic <cora|citeseer>_<config|erdos>_<percent> families.
bool is_known_table(const std::string& table);
// Trains GAE, GVAE, TO-GAE and TO-GVAE on the prepared series, evaluates
// them, and writes <table>_report.{csv,json} plus <table>_comparison.csv
// (produced vs reference with absolute deltas). Returns the comparison path.
std::filesystem::path cmd_reproduce(const std::string& table, const ExperimentConfig& cfg,
                                    const std::filesystem::path& reference_file);

}  // namespace togae
