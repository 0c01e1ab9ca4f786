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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "togae/tensor.hpp"

namespace togae {

using Vertex = std::uint32_t;

// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using RawPair = std::pair<std::int64_t, std::int64_t>;

// Simple undirected graph over vertices [0, N). Immutable once built.
class Graph {
 public:
  Graph() = default;
  // Takes edges that are already canonical, sorted and unique. Prefer
  // canonicalize_edges for arbitrary input.
  static Graph from_canonical(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Sorted neighbours of v.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

// Drops self-loops, collapses duplicates in either orientation.
// Throws InputError naming the first pair with an endpoint outside [0, N).
Graph canonicalize_edges(std::span<const RawPair> raw_pairs, std::size_t num_vertices);
Graph canonicalize_edges(std::span<const Edge> pairs, std::size_t num_vertices);

std::vector<std::size_t> degree_vector(const Graph& g);

// Edges of `later` missing from `earlier`. Throws ShapeError on vertex-count mismatch.
std::vector<Edge> edge_difference(const Graph& later, const Graph& earlier);

// D^{-1/2} (A + I) D^{-1/2} with D the degree matrix of A + I.
class NormalizedAdjacency {
 public:
  explicit NormalizedAdjacency(SparseMatrix matrix) : matrix_(std::move(matrix)) {}
  const SparseMatrix& matrix() const noexcept { return matrix_; }
  std::size_t num_vertices() const noexcept { return matrix_.rows(); }

 private:
  SparseMatrix matrix_;
};

NormalizedAdjacency normalize_adjacency(const Graph& g);

enum class SeriesOrigin { kSynthetic, kEmpirical };

std::string to_string(SeriesOrigin origin);
SeriesOrigin series_origin_from_string(const std::string& name);

// Ordered snapshots G_0 ... G_t over one vertex universe. `metadata_json` is a
// JSON object carrying generation parameters or partition boundaries.
class TemporalGraphSeries {
 public:
  TemporalGraphSeries(std::vector<Graph> snapshots, SeriesOrigin origin,
                      std::string metadata_json = "{}");

  std::size_t size() const noexcept { return snapshots_.size(); }
  std::size_t num_vertices() const noexcept { return snapshots_.front().num_vertices(); }
  const Graph& operator[](std::size_t i) const { return snapshots_.at(i); }
  std::span<const Graph> snapshots() const noexcept { return snapshots_; }
  SeriesOrigin origin() const noexcept { return origin_; }
  const std::string& metadata_json() const noexcept { return metadata_json_; }

  friend bool operator==(const TemporalGraphSeries&, const TemporalGraphSeries&) = default;

 private:
  std::vector<Graph> snapshots_;
  SeriesOrigin origin_;
  std::string metadata_json_;
};

}  // namespace togae
