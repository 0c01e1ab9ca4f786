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

#include <filesystem>
#include <string>

#include "json.hpp"
#include "togae/models.hpp"
#include "togae/nn.hpp"
#include "togae/train.hpp"

namespace togae {

// Trained weights plus everything needed to resume or audit the run.
struct Checkpoint {
  Model model;
  AdamState optimizer;
  TrainConfig config;
  std::size_t input_dim = 0;
  std::string provenance_json = "{}";
};

// JSON document tagged "togae-checkpoint/1". Doubles round-trip exactly.
void save_checkpoint(const Checkpoint& checkpoint, const std::filesystem::path& path);
// Throws IoError naming the path on a missing, malformed or inconsistent file.
Checkpoint load_checkpoint(const std::filesystem::path& path);

nlohmann::json train_config_to_json(const TrainConfig& cfg);
// Fields absent from `j` keep their value in `base`. Unknown keys are rejected.
TrainConfig train_config_from_json(const nlohmann::json& j, TrainConfig base = {});

}  // namespace togae
