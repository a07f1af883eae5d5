// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Counter-based random streams. A generator is fully determined by
// (global seed, stream id, counter), so every consumer can rebuild its
// stream for a given step without sharing mutable state.

#pragma once

#include <cstdint>

namespace dpfrl {

enum class StreamKind : std::uint64_t {
  kParamInit = 1,
  kEnvTransition,
  kEnvObservation,
  kEnvNoise,
  kEnvReset,
  kBeliefInit,
  kCellNoise,
  kResample,
  kPolicy,
  kTest,
};

constexpr std::uint64_t stream_id(StreamKind kind, std::uint64_t index = 0) {
  return (static_cast<std::uint64_t>(kind) << 40) ^ index;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller; the second variate is cached).
  double normal();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace dpfrl
