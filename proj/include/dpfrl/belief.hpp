// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Particle belief and its differentiable update: observation-conditioned
// transition, discriminative reweighting, soft-resampling and
// moment-generating-function features.
//
// Beliefs of E parallel environments are batched: particles are (E, K, H)
// and log-weights (E, K), normalized per environment in log space.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dpfrl/errors.hpp"
#include "dpfrl/layers.hpp"

namespace dpfrl {

template <typename T>
struct ParticleBelief {
  Tensor<T> particles;    // (E, K, H)
  Tensor<T> log_weights;  // (E, K)

  std::size_t batch() const { return particles.dim(0); }
  std::size_t particle_count() const { return particles.dim(1); }
  std::size_t latent_size() const { return particles.dim(2); }
};

template <typename T>
struct BeliefFeatures {
  Tensor<T> mean;  // (E, H)
  Tensor<T> mgf;   // (E, m); undefined when m == 0

  std::size_t mgf_count() const { return mgf.defined() ? mgf.dim(1) : 0; }
};

/// PF-GRU transition parameters: the gated cell plus the variance branch
/// Sigma = softplus(W_s [h, x] + b_s) + sigma_min.
template <typename T>
struct PfGruCell {
  GatedCell<T> gates;
  Tensor<T> w_sh, w_sx, b_s;

  PfGruCell() = default;
  PfGruCell(std::size_t hidden, std::size_t input, Initializer& init);

  static std::size_t parameter_count(std::size_t hidden, std::size_t input) {
    return GatedCell<T>::parameter_count(hidden, input) + hidden * hidden + input * hidden + hidden;
  }
  void collect(const std::string& prefix, std::vector<NamedTensor<T>>& out) const;
};

/// f_obs(h, o) = W_o [h, o] + b_o, read as a log-compatibility.
template <typename T>
struct CompatibilityHead {
  Tensor<T> w_h;  // (H, 1)
  Tensor<T> w_x;  // (O, 1)
  Tensor<T> b;    // (1)

  CompatibilityHead() = default;
  CompatibilityHead(std::size_t hidden, std::size_t encoding, Initializer& init);

  static std::size_t parameter_count(std::size_t hidden, std::size_t encoding) { return hidden + encoding + 1; }
  void collect(const std::string& prefix, std::vector<NamedTensor<T>>& out) const;
};

struct TransitionOptions {
  double sigma_min = 1e-3;
  /// false: the candidate noise is skipped entirely (zero-variance cell).
  bool stochastic = true;
  std::int64_t step = -1;
};

/// Particles h0 + noise_std * N(0, I) per environment, uniform weights -log K.
/// One generator per environment; the batch size is rngs.size().
template <typename T>
ParticleBelief<T> init_belief(const Tensor<T>& h0, std::size_t particles, std::span<Rng> rngs,
                              double noise_std = 0.1);

/// Moves every particle through the PF-GRU cell with input [obs_enc, act_enc].
/// Weights are passed through untouched.
template <typename T>
ParticleBelief<T> transition_update(const ParticleBelief<T>& belief, const Tensor<T>& obs_encoding,
                                    const Tensor<T>& action_encoding, const PfGruCell<T>& cell,
                                    const TransitionOptions& options, Rng& rng);

/// (E, K) logits of the compatibility head.
template <typename T>
Tensor<T> compatibility_logits(const Tensor<T>& particles, const Tensor<T>& obs_encoding,
                               const CompatibilityHead<T>& head);

/// log w' = log w + logit - logsumexp(log w + logit).
template <typename T>
ParticleBelief<T> reweight(const ParticleBelief<T>& belief, const Tensor<T>& logits, std::int64_t step = -1);

/// K i.i.d. draws per environment from q(i) = alpha w_i + (1 - alpha) / K by
/// inverse CDF, one uniform per particle. Returns local indices, row-major (E, K).
std::vector<std::size_t> sample_resample_indices(std::span<const double> weights, std::size_t batch,
                                                 std::size_t particles, double alpha, Rng& rng);

/// Soft-resampling with given local indices: particle j copies h_idx(j) and
/// gets weight w_idx / (alpha w_idx + (1 - alpha) / K), renormalized.
template <typename T>
ParticleBelief<T> soft_resample_with_indices(const ParticleBelief<T>& belief, double alpha,
                                             std::span<const std::size_t> indices);

template <typename T>
ParticleBelief<T> soft_resample(const ParticleBelief<T>& belief, double alpha, Rng& rng);

/// Mean particle sum_i w_i h_i and M_j = sum_i w_i exp(<v_j, h_i>), the latter
/// evaluated as exp(min(logsumexp_i(log w_i + <v_j, h_i>), 30)). `locations` is
/// (m, H); pass an undefined tensor for mean-only features.
template <typename T>
BeliefFeatures<T> mgf_features(const ParticleBelief<T>& belief, const Tensor<T>& locations);

/// Per-environment selection: rows with reset[e] != 0 come from `fresh`.
template <typename T>
ParticleBelief<T> reset_where(const ParticleBelief<T>& belief, const ParticleBelief<T>& fresh,
                              std::span<const std::uint8_t> reset);

/// Throws FilterError if weights are not normalized within `tolerance` or any
/// value is non-finite.
template <typename T>
void check_belief(const ParticleBelief<T>& belief, double tolerance, std::int64_t step = -1);

/// CSV rows "env,step,particle,weight,h_0..h_{H-1}" for every particle.
template <typename T>
void write_particle_dump(std::ostream& out, const ParticleBelief<T>& belief, std::int64_t step,
                         bool header = false);

constexpr double kMgfExponentCap = 30.0;

}  // namespace dpfrl
