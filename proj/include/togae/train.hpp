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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "togae/graph.hpp"
#include "togae/models.hpp"
#include "togae/nn.hpp"

namespace togae {

struct TrainConfig {
  std::size_t epochs = 50;
  double learning_rate = 0.001;
  double l2_lambda = 5e-4;
  ModelDims dims;
  ModelKind model_kind = ModelKind::kGae;
  // Train on G_i -> G_{i+offset_delta} when true, G_i -> G_i otherwise.
  bool offset = true;
  std::size_t offset_delta = 1;
  std::uint64_t seed = 0;
  // Overrides for the class-balancing weights derived from the target.
  std::optional<double> pos_weight;
  std::optional<double> norm;
  DecoderOptions decoder;

  // Throws InputError when a field is out of range.
  void validate() const;
};

struct TrainResult {
  Model model;
  AdamState optimizer;
  std::vector<LossReport> trace;  // one entry per epoch, loss before that epoch's update
};

// Full-batch training: encode `input`, reconstruct `target`, one Adam step
// per epoch. Throws ShapeError on vertex-count mismatch and NumericError
// (naming the epoch) when the loss or a gradient becomes non-finite.
TrainResult train_offset(const Graph& input, const Graph& target, const TrainConfig& cfg);
TrainResult train_offset(const Graph& input, const Graph& target, const Features& features,
                         const TrainConfig& cfg);

// Non-temporal baseline: the target is the input itself.
TrainResult train_baseline(const Graph& g, const TrainConfig& cfg);

// epoch,total,reconstruction,kl,l2 rows preceded by a provenance comment line.
void write_loss_csv(std::ostream& out, const std::vector<LossReport>& trace,
                    const std::string& provenance_json);

}  // namespace togae
