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
#include <span>
#include <vector>

#include "togae/rng.hpp"
#include "togae/tensor.hpp"

namespace togae {

enum class Activation { kRelu, kIdentity };

// Uniform Glorot initialisation on [-s, s], s = sqrt(6 / (d_in + d_out)).
DenseMatrix glorot_init(std::size_t d_in, std::size_t d_out, Rng& rng);

struct LayerGradients {
  DenseMatrix input;   // d loss / d H; empty when the input was the identity
  DenseMatrix weight;  // d loss / d W
};

// One graph-convolution layer act(A_hat * H * W), without bias.
//
// forward() caches what backward() needs. The cache keeps a pointer to the
// adjacency, which must stay alive until backward() returns.
class GcnLayer {
 public:
  GcnLayer() = default;
  GcnLayer(DenseMatrix weight, Activation activation);

  const DenseMatrix& weight() const noexcept { return weight_; }
  DenseMatrix& weight() noexcept { return weight_; }
  Activation activation() const noexcept { return activation_; }
  std::size_t in_dim() const noexcept { return weight_.rows(); }
  std::size_t out_dim() const noexcept { return weight_.cols(); }

  // Stateless evaluation; same arithmetic as forward().
  DenseMatrix apply(const SparseMatrix& a_hat, const DenseMatrix& h) const;
  DenseMatrix apply_identity(const SparseMatrix& a_hat) const;

  DenseMatrix forward(const SparseMatrix& a_hat, const DenseMatrix& h);
  // Same as forward(a_hat, I) without materialising I: A_hat * I * W = A_hat * W.
  DenseMatrix forward_identity(const SparseMatrix& a_hat);

  // Throws StateError when no forward pass populated the cache.
  LayerGradients backward(const DenseMatrix& grad_out) const;

  void clear_cache() noexcept;

 private:
  DenseMatrix weight_;
  Activation activation_ = Activation::kIdentity;

  const SparseMatrix* cached_a_hat_ = nullptr;
  std::optional<DenseMatrix> cached_ah_;  // nullopt: input was the identity
  DenseMatrix cached_pre_;
};

struct AdamConfig {
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  AdamConfig config;
  std::vector<DenseMatrix> first_moment;
  std::vector<DenseMatrix> second_moment;
  std::uint64_t step = 0;
};

// In-place bias-corrected Adam update of every parameter. Moments are
// allocated on the first call. Throws ShapeError on any mismatch.
void adam_step(std::span<DenseMatrix* const> params, std::span<const DenseMatrix> grads,
               AdamState& state);

// lambda * w, the gradient of 0.5 * lambda * ||w||^2.
DenseMatrix l2_grad(const DenseMatrix& w, double lambda);
// 0.5 * lambda * sum of squared weights over all matrices.
double l2_penalty(std::span<const DenseMatrix* const> weights, double lambda);

}  // namespace togae
