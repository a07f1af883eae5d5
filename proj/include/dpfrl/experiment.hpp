// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Experiment grids (noise-length sweep, ablation family), the summarizer that
// turns finished runs into per-cell statistics, and learning-curve output.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dpfrl/config.hpp"

namespace dpfrl {

struct Arm {
  Variant variant = Variant::kDpfrl;
  std::size_t particles = 30;

  friend bool operator==(const Arm&, const Arm&) = default;
};

struct ExperimentSpec {
  TrainConfig base;
  std::vector<Arm> arms;
  std::vector<std::size_t> noise_lengths;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output;
};

struct RunSpec {
  std::string name;  // also the run directory under the experiment output
  TrainConfig config;
};

/// DPFRL and the GRU baseline over l in {0, 50, 100}, seeds {1, 2, 3}.
ExperimentSpec sweep_spec(const TrainConfig& base, const std::filesystem::path& output);

/// DPFRL (K from base), DPFRL with one particle, mean-only features, GRU merge
/// and the generative observation model, all at one noise length.
ExperimentSpec ablation_spec(const TrainConfig& base, const std::filesystem::path& output,
                             std::size_t noise_length = 50);

/// Arms outermost, then noise lengths, then seeds; the order depends on nothing else.
std::vector<RunSpec> enumerate_runs(const ExperimentSpec& spec);

std::string run_name(const TrainConfig& config);

/// A run is complete once its final checkpoint exists.
bool run_complete(const std::filesystem::path& run_dir);

/// Trains every run that is not already complete, one after another.
/// Returns the number of runs trained.
std::size_t run_experiment(const ExperimentSpec& spec, std::ostream* progress = nullptr);

/// Mean of the logged return over the trailing 10% of updates (at least one).
/// Records without a return are skipped; nullopt when none has one.
constexpr double kSmoothingFraction = 0.1;
std::optional<double> final_smoothed_return(const std::vector<std::optional<double>>& returns);

struct RunResult {
  std::filesystem::path dir;
  TrainConfig config;
  bool complete = false;
  std::size_t updates = 0;
  std::optional<double> final_return;
};

struct CellSummary {
  Arm arm;
  std::size_t noise_length = 0;
  std::vector<RunResult> runs;  // ordered by seed
  std::optional<double> median, min, max;  // over complete runs with a return
  std::size_t incomplete = 0;
};

struct Robustness {
  Arm arm;
  std::optional<double> low, high;  // medians at the smallest and largest l
  std::size_t low_l = 0, high_l = 0;
  std::optional<double> ratio;      // high / low, only when low > 0
  std::string note;                 // why the ratio is missing, if it is
  // (high - floor) / (low - floor) with floor the random-policy return: the
  // share of the improvement over chance that survives the noise. Defined
  // whenever low beats the floor, whatever the sign of the returns.
  std::optional<double> normalized_ratio;
};

struct CurveSummary {
  std::vector<CellSummary> cells;
  std::vector<Robustness> robustness;
  std::optional<double> floor;  // random-policy return used for normalization
};

double median(std::vector<double> values);

/// Reads every run directory directly under `experiment_dir` (any directory
/// holding config.txt). Runs without a final checkpoint are kept and flagged.
CurveSummary summarize(const std::filesystem::path& experiment_dir, std::optional<double> floor = std::nullopt);
CurveSummary summarize_runs(std::vector<RunResult> runs, std::optional<double> floor = std::nullopt);

/// Mean return of the observation-blind Gaussian policy under the runs'
/// environment settings (the reference for normalized ratios).
double random_policy_floor(const TrainConfig& config, std::size_t episodes = 1000);

RunResult read_run(const std::filesystem::path& run_dir);

/// summary.csv and the plain-text table.
void write_summary_csv(const CurveSummary& summary, std::ostream& out);
void write_summary_table(const CurveSummary& summary, std::ostream& out);

/// Writes curves.csv (one row per metrics record) and curves.svg into
/// `experiment_dir`. Returns the number of records; zero means nothing found
/// and no files were written.
std::size_t write_curves(const std::filesystem::path& experiment_dir);

}  // namespace dpfrl
