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
#include <functional>
#include <optional>
#include <string_view>

// Inner-loop kernels of the decoder. Every kernel has a scalar reference
// implementation; SIMD variants are selected at runtime when the CPU supports
// them.
//
// Contract between variants:
//   row_logits, weighted_row_sum  bit-identical to the scalar reference
//                                 (lanes run over independent outputs; each
//                                 output accumulates in the same order)
//   softplus_sigmoid              agrees with the scalar reference to a few ulp
//                                 (vector exp/log1p approximations)

namespace togae::kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  // out[j] = sum_k row[k] * zt[k * n + j] for j in [0, n), k ascending.
  // `zt` is the d x n transposed embedding matrix.
  void (*row_logits)(const double* row, const double* zt, std::size_t d, std::size_t n,
                     double* out);
  // softplus[j] = log(1 + exp(x[j])), sigmoid[j] = 1 / (1 + exp(-x[j])).
  void (*softplus_sigmoid)(const double* x, std::size_t n, double* softplus, double* sigmoid);
  // out[k] += sum_j c[j] * z[j * d + k] for k in [0, d), j ascending.
  void (*weighted_row_sum)(const double* c, const double* z, std::size_t n, std::size_t d,
                           double* out);
};

const KernelTable& scalar_table();
// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* avx2_table();

// Best table for this CPU, unless overridden by set_active_isa or the
// TOGAE_ISA environment variable ("scalar" | "avx2").
const KernelTable& active();
Isa active_isa();
// Throws InputError when `isa` is unavailable on this machine.
void set_active_isa(Isa isa);
bool isa_available(Isa isa);

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

// Runs fn(block_index) for every block in [0, num_blocks) on up to `threads`
// worker threads. Block b always goes to worker b % threads. Callers must
// write disjoint outputs per block.
void parallel_for_blocks(std::size_t num_blocks, std::size_t threads,
                         const std::function<void(std::size_t)>& fn);

}  // namespace togae::kernels
