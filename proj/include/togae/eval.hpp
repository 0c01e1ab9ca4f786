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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "togae/graph.hpp"
#include "togae/models.hpp"
#include "togae/rng.hpp"

namespace togae {

struct EdgeSplit {
  Graph retained;              // input minus the test positives
  std::vector<Edge> test_pos;  // removed edges
  std::vector<Edge> test_neg;  // non-edges of the full input, |test_neg| == |test_pos|
};

// Holds out floor(test_frac * |E|) uniformly chosen edges and samples as many
// negatives. Throws InputError when g has fewer than 10 edges or test_frac is
// outside (0, 1).
EdgeSplit split_edges(const Graph& g, double test_frac, Rng& rng);

// `count` distinct uniformly random vertex pairs that are neither edges of g
// nor self-loops. Throws InputError when fewer than `count` such pairs exist.
std::vector<Edge> sample_negative_edges(const Graph& g, std::size_t count, Rng& rng);

// Probability that a random positive outscores a random negative, ties
// counting one half. Throws InputError on empty input or NaN scores.
double auc(std::span<const double> pos_scores, std::span<const double> neg_scores);

// Mean over positives of the precision at each positive's rank, ranking by
// score descending, then positives first, then index ascending. Throws
// InputError when no label is positive.
double average_precision(std::span<const double> scores, std::span<const std::uint8_t> labels);
// Positives are indexed before negatives.
double average_precision(std::span<const double> pos_scores, std::span<const double> neg_scores);

struct MetricStat {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation across repeats
  std::size_t n = 1;
};

struct SnapshotMetrics {
  std::size_t snapshot = 0;
  std::optional<MetricStat> auc;
  std::optional<MetricStat> ap;
  std::optional<MetricStat> ne_auc;  // absent when the snapshot has no new edges
  std::optional<MetricStat> ne_ap;
};

struct MetricReport {
  std::vector<SnapshotMetrics> snapshots;
};

struct EvalOptions {
  // Whole-graph positives are subsampled to this many per snapshot (0: no cap).
  std::size_t positive_cap = 100000;
  double test_frac = 0.10;
};

// Embeddings from G_0 only (GVAE: the mean); for every later snapshot G_i,
// score its edges against sampled non-edges of G_i, and separately the new
// edges E_i \ E_0 against fresh non-edges.
MetricReport evolution_pattern_eval(const Model& model, const TemporalGraphSeries& series,
                                    Rng& rng, const EvalOptions& options = {});

// Frozen weights; for every later snapshot G_i, hold out edges, embed the
// retained graph and score the held-out edges against sampled non-edges. The
// new-edge variant keeps only held-out edges absent from G_0.
MetricReport future_link_eval(const Model& model, const TemporalGraphSeries& series, Rng& rng,
                              const EvalOptions& options = {});

// Per-cell mean and population std. Reports must cover the same snapshots in
// the same order (ShapeError otherwise). Metrics absent from some repeats are
// aggregated over the repeats that have them.
MetricReport aggregate_repeats(std::span<const MetricReport> reports);

struct LabeledReport {
  std::string model;
  MetricReport report;
};

// model,snapshot,metric,mean,std,n with a provenance comment line first.
void write_report_csv(std::ostream& out, std::span<const LabeledReport> reports,
                      const std::string& provenance_json);
std::string report_to_json(std::span<const LabeledReport> reports,
                           const std::string& provenance_json);

}  // namespace togae
