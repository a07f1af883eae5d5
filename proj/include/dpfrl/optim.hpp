// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "dpfrl/tensor.hpp"

namespace dpfrl::ad {

struct RmsPropOptions {
  double lr = 1e-4;
  double alpha = 0.99;
  double eps = 1e-5;
};

/// RMSProp with one squared-gradient accumulator per parameter:
///   acc <- alpha * acc + (1 - alpha) * g^2
///   p   <- p - lr * g / (sqrt(acc) + eps)
template <typename T>
class RmsProp {
 public:
  RmsProp(std::vector<Tensor<T>> params, RmsPropOptions options);

  /// Applies one update from the parameters' current gradients. Returns false
  /// (and leaves every parameter and accumulator untouched) if any gradient is
  /// non-finite.
  bool step();

  std::size_t skipped_steps() const { return skipped_; }
  const std::vector<std::vector<T>>& accumulators() const { return acc_; }
  std::vector<std::vector<T>>& accumulators() { return acc_; }
  const RmsPropOptions& options() const { return options_; }

 private:
  std::vector<Tensor<T>> params_;
  std::vector<std::vector<T>> acc_;
  RmsPropOptions options_;
  std::size_t skipped_ = 0;
};

/// L2 norm over the concatenation of every parameter gradient.
template <typename T>
double global_grad_norm(const std::vector<Tensor<T>>& params);

/// Rescales every gradient by max_norm / norm when the global norm exceeds
/// max_norm. Returns the applied factor (1 when no clipping happened).
template <typename T>
double clip_global_norm(std::vector<Tensor<T>>& params, double max_norm);

extern template class RmsProp<float>;
extern template class RmsProp<double>;

}  // namespace dpfrl::ad
