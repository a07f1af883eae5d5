// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Central finite-difference oracle for the gradient tape.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dpfrl/tensor.hpp"

namespace dpfrl::ad {

using GraphBuilder = std::function<Tensor<double>(const std::vector<Tensor<double>>&)>;

struct GradCheckOptions {
  double step = 1e-5;
  /// Upper bound on probed coordinates per input (0 = every coordinate).
  /// Coordinates are chosen with a fixed stride so reruns probe the same set.
  std::size_t max_coords_per_input = 0;
};

struct GradCheckReport {
  double max_rel_error = 0.0;
  bool finite = true;
  std::size_t worst_input = 0;
  std::size_t worst_coord = 0;
  std::size_t coords_checked = 0;
  std::string message;

  bool passed(double tolerance) const { return finite && max_rel_error < tolerance; }
};

/// Compares the tape gradient of the scalar `f(inputs)` with central
/// differences. The error per coordinate is
/// |analytic - numeric| / max(1, |numeric|). `f` must be deterministic:
/// any randomness has to be keyed so that every call draws the same values.
/// Inputs must be parameter leaves; their values are restored on return.
GradCheckReport grad_check(const GraphBuilder& f, std::vector<Tensor<double>> inputs,
                           const GradCheckOptions& options = {});

}  // namespace dpfrl::ad
