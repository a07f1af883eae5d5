// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Every parameterized network of the agent and the per-step recurrent
// pipeline that ties them to the particle belief.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dpfrl/belief.hpp"

namespace dpfrl {

enum class Variant { kDpfrl, kDpfrlMean, kDpfrlGruMerge, kDpfrlGenerative, kGru };

std::string_view variant_name(Variant v);
/// Throws ConfigError listing the valid tags.
Variant parse_variant(std::string_view tag);

struct ModelDims {
  std::size_t observation = 2;  // 2 + l
  std::size_t hidden = 128;
  std::size_t mgf = 3;
  std::size_t encoding = 64;
  std::size_t action_encoding = 64;
  std::size_t head_hidden = 64;
  std::size_t action = 2;
  Variant variant = Variant::kDpfrl;

  bool uses_particles() const { return variant != Variant::kGru; }
  bool uses_mgf() const { return (variant == Variant::kDpfrl || variant == Variant::kDpfrlGenerative) && mgf > 0; }
  bool uses_decoder() const { return variant == Variant::kDpfrlGenerative; }
  bool uses_merge() const { return variant == Variant::kDpfrlGruMerge; }
  std::size_t policy_input() const { return hidden + (uses_mgf() ? mgf : 0); }
};

template <typename T>
struct PolicyOutput {
  Tensor<T> mean;     // (E, A)
  Tensor<T> log_std;  // (A), clamped to [-5, 2]
  Tensor<T> value;    // (E)
};

constexpr double kLogStdMin = -5.0;
constexpr double kLogStdMax = 2.0;
constexpr double kDecoderSigmaFloor = 1e-3;

template <typename T>
class Model {
 public:
  Model(const ModelDims& dims, std::uint64_t seed);

  const ModelDims& dims() const { return dims_; }

  /// Parameters in a fixed order with stable names.
  std::vector<NamedTensor<T>> named_parameters() const;
  std::vector<Tensor<T>> parameters() const;
  std::size_t parameter_count() const;
  static std::size_t parameter_count(const ModelDims& dims);

  struct Buffer {
    std::string name;
    ad::BatchNormStats<T>* stats;
  };
  std::vector<Buffer> buffers();

  /// (E, 2 + l) -> (E, 64).
  Tensor<T> encode_observation(const Tensor<T>& obs, RunMode mode);
  /// (E, 2) -> (E, 64).
  Tensor<T> encode_action(const Tensor<T>& action, RunMode mode);

  PolicyOutput<T> policy_heads(const Tensor<T>& input) const;

  /// Sum over observation dimensions of log N(o_d; mu_d(h), sigma_d(h)) for
  /// every particle; (E, K). ConfigError unless the decoder is enabled.
  Tensor<T> generative_logits(const Tensor<T>& particles, const Tensor<T>& obs, RunMode mode);

  /// Gated recurrence over the K pairs [h_i; w_i] in index order; (E, H).
  Tensor<T> gru_merge(const ParticleBelief<T>& belief) const;

  /// Deterministic GRU update of the baseline; hidden is (E, H).
  Tensor<T> gru_baseline_step(const Tensor<T>& hidden, const Tensor<T>& obs_encoding,
                              const Tensor<T>& action_encoding) const;

  const Tensor<T>& initial_latent() const { return h0_; }
  const PfGruCell<T>& cell() const { return cell_; }
  const GatedCell<T>& baseline_cell() const { return gru_; }
  const CompatibilityHead<T>& compatibility() const { return compat_; }
  const Tensor<T>& mgf_locations() const { return mgf_; }
  const GatedCell<T>& merge_cell() const { return merge_; }

 private:
  ModelDims dims_;
  DenseBlock<T> obs1_, obs2_, act_;
  PfGruCell<T> cell_;
  GatedCell<T> gru_;
  CompatibilityHead<T> compat_;
  Tensor<T> mgf_;
  Tensor<T> h0_;
  Linear<T> actor1_, actor2_, critic1_, critic2_;
  Tensor<T> log_std_;
  DenseBlock<T> dec1_, dec2_;
  Linear<T> dec_out_;
  GatedCell<T> merge_;
};

/// log N(u; mean, exp(log_std)^2) summed over action dimensions; (E).
template <typename T>
Tensor<T> gaussian_log_prob(const Tensor<T>& u, const Tensor<T>& mean, const Tensor<T>& log_std);

/// Entropy of the diagonal Gaussian, sum_d 0.5 ln(2 pi e) + log_std_d; (1).
template <typename T>
Tensor<T> gaussian_entropy(const Tensor<T>& log_std);

struct FilterOptions {
  double alpha = 0.9;
  double sigma_min = 1e-3;
  bool stochastic = true;
  double init_noise = 0.1;
};

template <typename T>
struct StepResult {
  ParticleBelief<T> belief;
  BeliefFeatures<T> features;
  Tensor<T> policy_input;  // (E, F)
};

/// Fresh recurrent state for `rngs.size()` environments. The GRU baseline is
/// a single unit-weight particle at h0 without jitter.
template <typename T>
ParticleBelief<T> initial_state(const Model<T>& model, std::size_t particles, std::span<Rng> rngs,
                                const FilterOptions& options);

/// One filtering step: encode -> transition -> reweight -> soft-resample ->
/// mean + MGF features, then the policy input. The GRU baseline runs its
/// deterministic cell on the single particle instead.
template <typename T>
StepResult<T> dpfrl_step(Model<T>& model, const ParticleBelief<T>& belief, const Tensor<T>& obs,
                         const Tensor<T>& prev_action, RunMode mode, const FilterOptions& options, Rng& cell_rng,
                         Rng& resample_rng, std::int64_t step = -1);

/// Checkpoint: JSON with a format tag, version, config echo, named parameters
/// with shapes, and batch-norm running statistics.
template <typename T>
void save_checkpoint(const std::filesystem::path& path, Model<T>& model, const nlohmann::json& config);

/// Restores parameters and statistics; every name and shape must match.
/// Returns the stored config echo.
template <typename T>
nlohmann::json load_checkpoint(const std::filesystem::path& path, Model<T>& model);

/// Reads only the config echo of a checkpoint.
nlohmann::json read_checkpoint_config(const std::filesystem::path& path);

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kCheckpointVersion = 1;

}  // namespace dpfrl
