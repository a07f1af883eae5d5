// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Synchronous advantage actor-critic over the belief-conditioned policy.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "dpfrl/config.hpp"
#include "dpfrl/hike.hpp"

namespace dpfrl {

/// R_t = r_t + gamma (1 - done_t) R_{t+1}, seeded with the bootstrap value.
/// rewards and dones are (E, n) row-major; bootstrap is (E).
std::vector<double> compute_returns(std::span<const double> rewards, std::span<const std::uint8_t> dones,
                                    std::span<const double> bootstrap, std::size_t envs, std::size_t steps,
                                    double gamma);

template <typename T>
struct LossTerms {
  Tensor<T> total;
  double policy = 0;   // L^A
  double value = 0;    // L^V
  double entropy = 0;  // L^H = -mean entropy
};

/// log_probs, values and entropies are (E, n). The advantage R - V uses the
/// values' current numbers as constants, or `baseline` when given.
template <typename T>
LossTerms<T> a2c_loss(const Tensor<T>& log_probs, const Tensor<T>& values, const Tensor<T>& entropies,
                      std::span<const double> returns, double value_coef, double entropy_coef,
                      std::span<const double> baseline = {});

/// Per-coordinate tanh scaled by max_step, then projected into the closed
/// ball of radius max_step.
std::array<double, 2> squash_action(double u0, double u1, double max_step);

hike::HikeConfig hike_config(const TrainConfig& config);
hike::RewardMap reward_map(const TrainConfig& config);

struct MetricsRecord {
  std::int64_t step = 0;
  std::int64_t episodes = 0;
  std::optional<double> mean_return;
  double loss_policy = 0;
  double loss_value = 0;
  double loss_entropy = 0;
  double grad_norm = 0;
  std::optional<double> wall_time;
};

std::string to_json_line(const MetricsRecord& record);
MetricsRecord parse_metrics_line(std::string_view line);

struct TrainSummary {
  std::int64_t updates = 0;
  std::int64_t env_steps = 0;
  std::int64_t episodes = 0;
  std::optional<double> mean_return;
};

/// Writes config.txt, metrics.jsonl, checkpoints/ (and particles.csv when
/// enabled) into run_dir. Non-finite loss or parameters abort with a
/// diagnostic checkpoint and a TrainingError.
TrainSummary train(const TrainConfig& config, const std::filesystem::path& run_dir, std::ostream* progress = nullptr);

struct EvalReport {
  std::vector<double> returns;
  double mean = 0;
  double stddev = 0;
};

struct EvalOptions {
  std::size_t episodes = 100;
  std::optional<std::size_t> noise_length;  // defaults to the checkpoint's
  std::uint64_t seed = 12345;
  bool deterministic_env = false;
  bool deterministic_filter = false;
};

/// Greedy (mean-action) rollouts with batch-norm in eval mode.
EvalReport evaluate(const std::filesystem::path& checkpoint, const EvalOptions& options);

/// Same environment protocol under a policy that ignores observations and
/// draws u ~ N(0, I) before squashing.
EvalReport evaluate_random_policy(const TrainConfig& config, const EvalOptions& options);

EvalReport summarize_returns(std::vector<double> returns);

/// Finite-difference check of the full pipeline: a short rollout is
/// collected, then the A2C loss is replayed with sampled actions, returns
/// and advantages frozen, and compared against central differences over
/// every parameter. Runs at 64-bit on freshly initialized parameters plus a
/// small seeded jitter.
struct PipelineCheck {
  double max_rel_error = 0;
  std::size_t coords_checked = 0;
  bool finite = true;
  std::string message;
  std::string worst_parameter;
};
constexpr double kGradcheckJitter = 0.05;
constexpr double kGradcheckStep = 1e-6;
PipelineCheck pipeline_gradcheck(Variant variant = Variant::kDpfrl, std::size_t particles = 3,
                                 std::size_t hidden = 8, std::size_t noise_length = 2, std::uint64_t seed = 1);

}  // namespace dpfrl
