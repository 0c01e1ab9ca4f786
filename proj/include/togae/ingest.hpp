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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <vector>

#include "togae/graph.hpp"

namespace togae {

// "u v" per line, '#' comment lines and blank lines skipped. Extra columns
// are rejected. Throws ParseError with the 1-based line number.
std::vector<RawPair> parse_edge_list(std::istream& in);

struct DateTable {
  std::map<std::int64_t, std::chrono::sys_days> dates;
  // Ids listed more than once with differing dates (the earliest is kept).
  std::size_t conflicting_duplicates = 0;
};

// "id<TAB>YYYY-MM-DD" per line, '#' comments allowed.
DateTable parse_dates(std::istream& in);

struct TimestampedEdgeStream {
  std::vector<RawPair> edges;  // raw external ids
  std::map<std::int64_t, std::chrono::sys_days> node_dates;
};

// Dense [0, N) relabelling of every id appearing in an edge list, in
// ascending raw-id order.
struct IdMap {
  std::vector<std::int64_t> raw_ids;  // dense index -> raw id

  static IdMap from_edges(std::span<const RawPair> edges);
  std::size_t size() const noexcept { return raw_ids.size(); }
  // Throws InputError for unknown ids.
  Vertex dense(std::int64_t raw) const;
};

// Graph from raw ids: dense relabelling then canonicalisation.
Graph graph_from_raw_edges(std::span<const RawPair> edges);

enum class PartitionMode { kCumulative, kDisjoint };

struct PartitionReport {
  std::size_t undated_edges = 0;   // dropped: citing node has no date
  std::size_t retained_edges = 0;  // raw (pre-dedup) edges with a timestamp
};

// k equal-width intervals over [min date, max date] of the citing (source)
// node dates. Cumulative: G_i holds every edge up to the end of interval i.
// Disjoint: G_i holds only interval i. All snapshots share the dense vertex
// universe of the full edge list.
TemporalGraphSeries partition_snapshots(const TimestampedEdgeStream& stream, std::size_t k,
                                        PartitionMode mode = PartitionMode::kCumulative,
                                        PartitionReport* report = nullptr);

// Series directory: snapshot_NNN.edges files plus manifest.json.
void save_series(const TemporalGraphSeries& series, const std::filesystem::path& dir);
TemporalGraphSeries load_series(const std::filesystem::path& dir);

// Edge-list text with a "# vertices N" header, edges as "u v".
void write_edge_list(std::ostream& out, const Graph& g);
// Reads a file written by write_edge_list (vertex count from the header).
Graph read_edge_list(const std::filesystem::path& path);
// Reads a raw edge list (arbitrary integer ids) and relabels densely.
Graph read_raw_edge_list(const std::filesystem::path& path);

}  // namespace togae
