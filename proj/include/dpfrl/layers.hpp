// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Parameter containers shared by the filter and the networks.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dpfrl/ops.hpp"
#include "dpfrl/rng.hpp"

namespace dpfrl {

using ad::Tensor;

template <typename T>
struct NamedTensor {
  std::string name;
  Tensor<T> tensor;
};

/// Deterministic initializer source: every parameter draws from its own
/// counter-based stream.
struct Initializer {
  std::uint64_t seed = 0;
  std::uint64_t next_stream = 0;

  Rng stream() { return Rng(seed, stream_id(StreamKind::kParamInit, next_stream++)); }
};

/// Weight of shape (rows, cols) with orthonormal rows or columns, scaled by gain.
template <typename T>
Tensor<T> orthogonal(std::size_t rows, std::size_t cols, double gain, Rng rng);

/// y = x W + b with W stored (in, out).
template <typename T>
struct Linear {
  Tensor<T> weight;
  Tensor<T> bias;

  Linear() = default;
  Linear(std::size_t in, std::size_t out, double gain, Initializer& init);

  std::size_t in_features() const { return weight.dim(0); }
  std::size_t out_features() const { return weight.dim(1); }
  Tensor<T> operator()(const Tensor<T>& x) const { return ad::add(ad::matmul(x, weight), bias); }
  void collect(const std::string& prefix, std::vector<NamedTensor<T>>& out) const;
};

template <typename T>
struct BatchNorm {
  Tensor<T> gamma;
  Tensor<T> beta;
  ad::BatchNormStats<T> stats;

  BatchNorm() = default;
  explicit BatchNorm(std::size_t features);

  void collect(const std::string& prefix, std::vector<NamedTensor<T>>& out) const;
};

/// Forward-pass switches: batch-norm mode and whether train-mode batch
/// statistics may update the running averages.
struct RunMode {
  ad::Mode mode = ad::Mode::kTrain;
  bool update_stats = true;
};

/// affine -> batchnorm -> ReLU.
template <typename T>
struct DenseBlock {
  Linear<T> linear;
  BatchNorm<T> norm;

  DenseBlock() = default;
  DenseBlock(std::size_t in, std::size_t out, Initializer& init) : linear(in, out, 1.0, init), norm(out) {}

  Tensor<T> operator()(const Tensor<T>& x, RunMode mode);
  void collect(const std::string& prefix, std::vector<NamedTensor<T>>& out) const;
};

/// Gated recurrent update on a batch of particles:
///   z = sigmoid(W_z [h, x] + b_z),  r = sigmoid(W_r [h, x] + b_r)
///   n = W_n [r * h, x] + b_n
///   h' = (1 - z) * tanh(n) + z * h
/// Every [h, x] weight is stored as an h block and an x block.
template <typename T>
struct GatedCell {
  Tensor<T> w_zh, w_zx, b_z;
  Tensor<T> w_rh, w_rx, b_r;
  Tensor<T> w_nh, w_nx, b_n;

  GatedCell() = default;
  GatedCell(std::size_t hidden, std::size_t input, Initializer& init);

  std::size_t hidden_size() const { return w_zh.dim(0); }
  std::size_t input_size() const { return w_zx.dim(0); }
  static std::size_t parameter_count(std::size_t hidden, std::size_t input) {
    return 3 * (hidden * hidden + input * hidden + hidden);
  }
  void collect(const std::string& prefix, std::vector<NamedTensor<T>>& out) const;
};

/// Hook applied to the candidate pre-activation n before tanh; identity for
/// a deterministic GRU, a reparameterized Gaussian draw for PF-GRU.
template <typename T>
using CandidateNoise = std::function<Tensor<T>(const Tensor<T>& candidate)>;

/// `h` is (E, K, H) and `x` is (E, X); each of the K particles of a row sees
/// the same input. Returns the updated (E, K, H) particles.
template <typename T>
Tensor<T> gated_update(const GatedCell<T>& cell, const Tensor<T>& h, const Tensor<T>& x,
                       const CandidateNoise<T>& noise = nullptr);

/// W_h h + W_x x + b for particles h (E, K, H) and shared input x (E, X),
/// returning (E, K, out).
template <typename T>
Tensor<T> particle_affine(const Tensor<T>& h, const Tensor<T>& w_h, const Tensor<T>& x, const Tensor<T>& w_x,
                          const Tensor<T>& bias);

}  // namespace dpfrl
