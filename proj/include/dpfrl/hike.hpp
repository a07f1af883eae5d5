// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Mountain Hike: 2-D continuous navigation with Gaussian transition and
// observation noise, plus an appended vector of l irrelevant uniform values.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace dpfrl::hike {

class EnvError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// r(x, y) over the map. Either the built-in analytic surface or a grid loaded
/// from file and bilinearly interpolated.
class RewardMap {
 public:
  /// 2 * exp(-|p - goal|^2 / 18) - 1: -1 background rising to +1 at the goal.
  static RewardMap analytic(Vec2 goal = {7.0, 7.0});
  /// Grid values are row-major with rows along y (ymin first) and columns
  /// along x (xmin first). The grid must cover [-half_extent, half_extent]^2.
  static RewardMap grid(std::size_t nx, std::size_t ny, double xmin, double xmax, double ymin, double ymax,
                        std::vector<double> values, double half_extent = 10.0);
  /// Text format: header "nx ny xmin xmax ymin ymax" followed by nx*ny values.
  static RewardMap load(const std::filesystem::path& path, double half_extent = 10.0);

  double operator()(double x, double y) const;
  bool is_grid() const { return !values_.empty(); }

 private:
  Vec2 goal_{};
  std::size_t nx_ = 0, ny_ = 0;
  double xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0;
  std::vector<double> values_;
};

struct HikeConfig {
  std::size_t noise_length = 0;  // l
  double max_step = 1.0;
  Vec2 start{-8.5, -8.5};
  Vec2 goal{7.0, 7.0};
  double half_extent = 10.0;
  double start_jitter_var = 0.25;
  double transition_var = 0.25;
  double observation_var = 1.0;
  double noise_bound = 10.0;
  int episode_length = 75;
  double action_cost = 0.01;
  // Test hooks: switching these off makes the corresponding term exactly zero.
  bool transition_noise = true;
  bool observation_noise = true;
  bool start_jitter = true;
  bool noise_vector = true;

  std::size_t observation_size() const { return 2 + noise_length; }
  /// Every noise source disabled.
  static HikeConfig deterministic(std::size_t l = 0);
};

struct StepResult {
  std::vector<double> observation;  // [o_s (2), o_n (l)]
  double reward = 0.0;
  bool done = false;
};

/// One environment instance. All randomness is drawn from counter-based
/// streams keyed by (seed, instance, step), with separate streams for the
/// transition, the position observation and the noise vector, so the state
/// trajectory does not depend on l.
class MountainHike {
 public:
  MountainHike(HikeConfig config, RewardMap reward, std::uint64_t seed, std::uint64_t instance = 0);

  std::vector<double> reset();
  StepResult step(Vec2 action);

  Vec2 position() const { return position_; }
  void set_position(Vec2 p) { position_ = p; }
  int steps_in_episode() const { return steps_; }
  bool episode_active() const { return active_; }
  std::uint64_t episodes_started() const { return episodes_; }
  const HikeConfig& config() const { return config_; }
  const RewardMap& reward_map() const { return reward_; }

 private:
  std::vector<double> observe();

  HikeConfig config_;
  RewardMap reward_;
  std::uint64_t seed_;
  std::uint64_t instance_;
  Vec2 position_{};
  int steps_ = 0;
  bool active_ = false;
  std::uint64_t episodes_ = 0;
  std::uint64_t lifetime_steps_ = 0;
};

struct VectorStep {
  std::vector<double> observations;  // n x (2 + l), row-major
  std::vector<double> rewards;
  std::vector<std::uint8_t> dones;
  /// Returns of episodes that finished during this step, in instance order.
  std::vector<double> finished_returns;
};

/// n independent instances with automatic reset on episode end. After a done
/// flag the observation row is the first observation of the next episode.
class VectorHike {
 public:
  VectorHike(std::size_t n, const HikeConfig& config, const RewardMap& reward, std::uint64_t seed);

  std::vector<double> reset();
  /// `actions` is n x 2 row-major.
  VectorStep step(const std::vector<double>& actions);

  std::size_t size() const { return envs_.size(); }
  std::size_t observation_size() const { return config_.observation_size(); }
  MountainHike& instance(std::size_t i) { return envs_.at(i); }

 private:
  HikeConfig config_;
  std::vector<MountainHike> envs_;
  std::vector<double> running_returns_;
};

}  // namespace dpfrl::hike
