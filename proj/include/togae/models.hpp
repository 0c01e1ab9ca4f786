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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "togae/graph.hpp"
#include "togae/nn.hpp"
#include "togae/rng.hpp"
#include "togae/tensor.hpp"

namespace togae {

// Vertex features. The default is the identity (one-hot per vertex), which is
// never materialised.
class Features {
 public:
  static Features identity(std::size_t num_vertices) { return Features(num_vertices); }
  static Features dense(DenseMatrix x) { return Features(std::move(x)); }

  bool is_identity() const noexcept { return !dense_.has_value(); }
  std::size_t rows() const noexcept { return dense_ ? dense_->rows() : n_; }
  std::size_t cols() const noexcept { return dense_ ? dense_->cols() : n_; }
  const DenseMatrix& matrix() const { return dense_.value(); }

 private:
  explicit Features(std::size_t n) : n_(n) {}
  explicit Features(DenseMatrix x) : n_(x.rows()), dense_(std::move(x)) {}

  std::size_t n_;
  std::optional<DenseMatrix> dense_;
};

enum class ModelKind { kGae, kGvae };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

struct ModelDims {
  std::size_t hidden = 32;
  std::size_t embed = 16;
};

// Two-layer encoder: relu hidden layer, linear embedding layer.
struct GaeModel {
  GcnLayer hidden;
  GcnLayer embed;
};

// Shared relu hidden layer feeding a mean head and a log-std head.
struct GvaeModel {
  GcnLayer hidden;
  GcnLayer mu_head;
  GcnLayer logstd_head;
};

using Model = std::variant<GaeModel, GvaeModel>;

// Glorot-initialised model. Layers draw from `init_rng` in declaration order.
Model make_model(ModelKind kind, std::size_t d_in, ModelDims dims, Rng& init_rng);
ModelKind kind_of(const Model& model);
ModelDims dims_of(const Model& model);
// Weights in a fixed order: hidden, then embed (GAE) or mu, logstd (GVAE).
std::vector<DenseMatrix*> parameters(Model& model);
std::vector<const DenseMatrix*> parameters(const Model& model);

DenseMatrix encode_gae(const GaeModel& model, const NormalizedAdjacency& a_hat, const Features& x);

struct GvaeEncoding {
  DenseMatrix mu;
  DenseMatrix log_std;
  DenseMatrix z_sample;  // mu + exp(log_std) * eps
};

GvaeEncoding encode_gvae(const GvaeModel& model, const NormalizedAdjacency& a_hat,
                         const Features& x, Rng& noise_rng);

// Deterministic evaluation embedding: Z for GAE, mu for GVAE.
DenseMatrix embed(const Model& model, const NormalizedAdjacency& a_hat, const Features& x);

// sigma(z_u . z_v) per pair. Throws InputError on out-of-range endpoints.
std::vector<double> decode_scores(const DenseMatrix& z, std::span<const Edge> pairs);

DenseMatrix sample_standard_normal(std::size_t rows, std::size_t cols, Rng& rng);

// Class balancing for the reconstruction loss.
struct LossWeights {
  double pos_weight = 1.0;
  double norm = 1.0;

  // pos_weight = (N^2 - 2|E|) / (2|E|), norm = N^2 / (2 (N^2 - 2|E|)).
  // An edgeless target gets pos_weight = 1.
  static LossWeights for_target(const Graph& target);
};

struct DecoderOptions {
  std::size_t block_size = 1024;
  std::size_t threads = 1;
};

struct ReconstructionResult {
  double loss = 0.0;
  DenseMatrix grad;  // d loss / d z
};

// Weighted Bernoulli negative log-likelihood of `target` (with self-loops as
// positives) under sigma(z z^T), averaged over all N^2 ordered pairs and
// scaled by weights.norm. Never materialises the N x N logits. The result is
// independent of block_size and threads.
ReconstructionResult reconstruction_loss_and_grad(const DenseMatrix& z, const Graph& target,
                                                  const LossWeights& weights,
                                                  const DecoderOptions& options = {});

struct KlResult {
  double value = 0.0;
  DenseMatrix grad_mu;
  DenseMatrix grad_log_std;
};

// (1/N) sum 0.5 (mu^2 + exp(2 log_std) - 1 - 2 log_std) against N(0, I).
KlResult kl_and_grad(const DenseMatrix& mu, const DenseMatrix& log_std);

struct LossReport {
  double total = 0.0;
  double reconstruction = 0.0;
  double kl = 0.0;
  double l2 = 0.0;
};

struct LossAndGradients {
  LossReport report;
  std::vector<DenseMatrix> grads;  // aligned with parameters(model)
};

// Full training objective and its gradient with respect to every weight.
// `noise` is the standard-normal draw for the GVAE reparameterisation
// (N x embed); it is ignored for GAE and may be empty there.
LossAndGradients loss_and_gradients(Model& model, const NormalizedAdjacency& a_hat,
                                    const Features& x, const Graph& target,
                                    const LossWeights& weights, double l2_lambda,
                                    const DenseMatrix& noise, const DecoderOptions& options = {});

}  // namespace togae
