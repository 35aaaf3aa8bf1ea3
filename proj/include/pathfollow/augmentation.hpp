// Copyright 2026 The pathfollow Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pathfollow/geometry.hpp"
#include "pathfollow/world.hpp"

namespace pathfollow {

struct AugmentationConfig {
  std::size_t n_augmented = 16;
  double pos_jitter = 1.0;   // meters, per axis
  double yaw_jitter = 0.1;   // radians
  double step = 0.2;         // meters
  double capture_radius = 0.4;
  std::uint64_t seed = 0;
  RenderConfig render;

  /// Throws Error(kInvalidArgument) when an invariant is violated.
  void validate() const;
};

/// RNG stream domains. Training and held-out test sweeps draw from disjoint
/// domains so a test sweep can never reproduce a training sweep.
inline constexpr std::string_view kTrainStream = "sweep/train";
inline constexpr std::string_view kTestStream = "sweep/test";

struct SampleMeta {
  std::string path_id;
  std::size_t sweep_index = 0;
  std::size_t step_index = 0;
  /// Seed of the RNG stream that produced the sample; 0 for the optimal sweep.
  std::uint64_t stream_tag = 0;
};

struct Sample {
  Observation observation;
  Angle target;
  /// Pose the observation was rendered at (after any perturbation).
  Pose pose;
  /// Waypoint the label points at.
  std::size_t target_index = 0;
  SampleMeta meta;
};

struct Dataset {
  std::vector<Sample> samples;
  std::vector<double> feature_mean;
  std::vector<double> feature_std;

  std::size_t dimension() const noexcept { return feature_mean.size(); }
};

inline constexpr double kStdFloor = 1e-8;

struct Sweep {
  std::vector<Pose> poses;  // includes the final (capturing) pose
  std::vector<Sample> samples;
};

/// Walks `path` at fixed step along the exact bearing to the current target,
/// emitting one labeled sample per pose before each step.
Sweep sweep_optimal(const Path& path, const AugmentationConfig& config,
                    const LandmarkWorld& world);

/// Same walk as sweep_optimal, but each emitted sample's pose is perturbed
/// (per-axis position and yaw noise) and re-labeled at the perturbed pose.
/// The stream is derived from (config.seed, domain, path id, sweep_index).
std::vector<Sample> sweep_jittered(const Path& path,
                                   const AugmentationConfig& config,
                                   const LandmarkWorld& world,
                                   std::size_t sweep_index,
                                   std::string_view domain = kTrainStream);

/// Stream seed used by sweep_jittered for a given sweep.
std::uint64_t sweep_stream_seed(const AugmentationConfig& config,
                                const Path& path, std::size_t sweep_index,
                                std::string_view domain);

/// Sweep 0 is the optimal sweep, sweeps 1..n_augmented-1 are jittered.
Dataset build_dataset(const Path& path, const AugmentationConfig& config,
                      const LandmarkWorld& world);

/// Held-out jittered sweeps from the test stream domain. Normalization stats
/// are computed over the test samples themselves and are not meant for use.
Dataset build_test_set(const Path& path, const AugmentationConfig& config,
                       const LandmarkWorld& world, std::size_t n_sweeps);

/// Per-feature mean and population std (floored at kStdFloor).
void compute_normalization(Dataset& dataset);

/// (features - mean) / std, element-wise.
std::vector<double> normalize(std::span<const double> mean,
                              std::span<const double> stddev,
                              std::span<const double> features);
std::vector<double> normalize(const Dataset& dataset,
                              const Observation& observation);

}  // namespace pathfollow
