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

#include <cstddef>
#include <cstdint>
#include <string>

#include "togae/graph.hpp"
#include "togae/rng.hpp"

namespace togae {

enum class RewireMode { kErdos, kConfiguration };

std::string to_string(RewireMode mode);
RewireMode rewire_mode_from_string(const std::string& name);

struct RewireConfig {
  RewireMode mode = RewireMode::kConfiguration;
  double p = 0.25;          // per-edge selection probability per step
  std::size_t steps = 10;   // snapshots generated after G_0
  std::uint64_t seed = 0;
  std::size_t max_attempts = 100;  // Erdos resample cap before keeping the edge

  void validate() const;
};

// Each edge is selected with probability p and moved to a uniformly random
// vertex pair that is neither a self-loop nor already present. An edge that
// finds no free slot in `max_attempts` draws stays where it was.
Graph rewire_step_erdos(const Graph& g, double p, Rng& rng, std::size_t max_attempts = 100);

// Selected edges are shuffled and paired; each pair is double-edge swapped
// when the swap creates no self-loop or duplicate. Degrees are preserved.
Graph rewire_step_configuration(const Graph& g, double p, Rng& rng);

// Deterministic swap of ((a,b),(c,d)) into ((a,d),(c,b)) on `g`; returns g
// unchanged when the swap would create a self-loop or duplicate edge or when
// either input edge is absent.
Graph double_edge_swap(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d);

// [g0, step(g0), step(step(g0)), ...] with steps + 1 snapshots. The manifest
// metadata records the configuration.
TemporalGraphSeries generate_series(const Graph& g0, const RewireConfig& cfg);

}  // namespace togae
