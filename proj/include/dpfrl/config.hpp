// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Training configuration and its flat "key = value" text form.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dpfrl/model.hpp"

namespace dpfrl {

struct TrainConfig {
  Variant variant = Variant::kDpfrl;
  std::size_t noise_length = 0;
  std::size_t particles = 30;
  std::size_t hidden = 128;
  std::size_t mgf_features = 3;
  double alpha = 0.9;
  double sigma_min = 1e-3;
  double init_noise = 0.1;
  double value_coef = 0.5;
  double entropy_coef = 0.01;
  double lr = 1e-4;
  double rmsprop_alpha = 0.99;
  double rmsprop_eps = 1e-5;
  double clip = 0.5;
  std::size_t n_steps = 5;
  double gamma = 0.99;
  std::size_t envs = 16;
  std::int64_t total_steps = 1000000;
  std::uint64_t seed = 1;
  int precision = 32;
  std::int64_t checkpoint_interval = 0;
  bool log_wall_time = true;
  std::int64_t particle_dump_steps = 0;
  std::string reward_map;
  bool deterministic_env = false;
  bool deterministic_filter = false;

  ModelDims model_dims() const;
  FilterOptions filter_options() const;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

/// Applies one "key = value" assignment. Unknown keys and malformed values
/// are ConfigErrors.
void set_config_value(TrainConfig& config, std::string_view key, std::string_view value);

/// Checks ranges; throws ConfigError naming the offending key.
void validate(const TrainConfig& config);

/// Parses the text form: one assignment per line, '#' starts a comment.
TrainConfig parse_config(std::string_view text, std::string_view origin = "<config>");
TrainConfig load_config(const std::filesystem::path& path);

/// DPFRL_SEED, when set, overrides `seed`.
void apply_environment_overrides(TrainConfig& config);

/// Every key with its effective value, in a fixed order; parse_config of the
/// result reproduces `config` exactly.
std::string echo_config(const TrainConfig& config);
nlohmann::json config_to_json(const TrainConfig& config);
TrainConfig config_from_json(const nlohmann::json& j);

std::vector<std::string> config_keys();

}  // namespace dpfrl
