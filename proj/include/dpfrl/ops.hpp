// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Differentiable tensor operations.
//
// Elementwise binary ops broadcast numpy-style (trailing dimensions aligned,
// size-1 dimensions stretched). Axis ops view the input as
// (outer, axis, inner). matmul is strictly 2-D.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dpfrl/rng.hpp"
#include "dpfrl/tensor.hpp"

namespace dpfrl::ad {

enum class Mode { kTrain, kEval };

template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b);
template <typename T>
Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b);
template <typename T>
Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b);

/// 2-D transpose.
template <typename T>
Tensor<T> transpose(const Tensor<T>& x);

template <typename T>
Tensor<T> concat(const std::vector<Tensor<T>>& parts, std::size_t axis);
template <typename T>
Tensor<T> slice(const Tensor<T>& x, std::size_t axis, std::size_t start, std::size_t length);
template <typename T>
Tensor<T> reshape(const Tensor<T>& x, Shape shape);
/// Selects sub-tensors along axis 0; gradient scatters back with accumulation.
template <typename T>
Tensor<T> gather_rows(const Tensor<T>& x, std::span<const std::size_t> rows);

template <typename T>
Tensor<T> sum(const Tensor<T>& x, std::size_t axis, bool keepdim = false);
template <typename T>
Tensor<T> mean(const Tensor<T>& x, std::size_t axis, bool keepdim = false);
template <typename T>
Tensor<T> logsumexp(const Tensor<T>& x, std::size_t axis, bool keepdim = false);
/// Sum of every element, shape {1}.
template <typename T>
Tensor<T> sum_all(const Tensor<T>& x);
template <typename T>
Tensor<T> mean_all(const Tensor<T>& x);

template <typename T>
Tensor<T> exp(const Tensor<T>& x);
template <typename T>
Tensor<T> log(const Tensor<T>& x);
template <typename T>
Tensor<T> tanh(const Tensor<T>& x);
template <typename T>
Tensor<T> sigmoid(const Tensor<T>& x);
template <typename T>
Tensor<T> softplus(const Tensor<T>& x);
template <typename T>
Tensor<T> relu(const Tensor<T>& x);
template <typename T>
Tensor<T> clamp(const Tensor<T>& x, T lo, T hi);
template <typename T>
Tensor<T> square(const Tensor<T>& x);
template <typename T>
Tensor<T> sqrt(const Tensor<T>& x);
template <typename T>
Tensor<T> scale(const Tensor<T>& x, T factor);
template <typename T>
Tensor<T> add_scalar(const Tensor<T>& x, T offset);

/// Stops gradient flow: returns an off-tape copy of the values.
template <typename T>
Tensor<T> detach(const Tensor<T>& x);

/// Reparameterized draw mean + exp(0.5 * log_var) * eps with eps ~ N(0, 1)
/// taken from `rng` in row-major order.
template <typename T>
Tensor<T> gaussian_sample(const Tensor<T>& mean, const Tensor<T>& log_var, Rng& rng);

template <typename T>
struct BatchNormStats {
  std::vector<T> running_mean;
  std::vector<T> running_var;
  T momentum = T(0.1);
  T eps = T(1e-5);

  explicit BatchNormStats(std::size_t features = 0)
      : running_mean(features, T(0)), running_var(features, T(1)) {}
};

/// Batch normalization over rows of an (N, F) input. Train mode normalizes with
/// batch statistics and updates `stats` (unbiased running variance); eval mode
/// applies the running statistics only. `update_stats = false` leaves them
/// untouched in train mode.
template <typename T>
Tensor<T> batchnorm(const Tensor<T>& x, const Tensor<T>& gamma, const Tensor<T>& beta,
                    BatchNormStats<T>& stats, Mode mode, bool update_stats = true);

}  // namespace dpfrl::ad
