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

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pathfollow/geometry.hpp"
#include "pathfollow/learner.hpp"
#include "pathfollow/world.hpp"

namespace pathfollow {

/// Privileged policy: steers exactly at the current target waypoint.
struct OraclePolicy {
  double operator()(const Pose& pose, Point2 target) const {
    return target_yaw_delta(pose, target).radians();
  }
};

/// Learned policy. Sees the rendered observation and nothing else.
struct ModelPolicy {
  const RegressorModel* model = nullptr;

  double operator()(const Observation& observation) const;
};

/// Fixed yaw delta every tick.
struct ConstantPolicy {
  double delta = 0.0;

  double operator()() const { return delta; }
};

using Policy = std::variant<OraclePolicy, ModelPolicy, ConstantPolicy>;

enum class Termination { kCompleted, kMaxSteps, kDiverged };

std::string_view to_string(Termination t);
Termination termination_from_string(std::string_view s);

struct RolloutConfig {
  double step = 0.2;
  double capture_radius = 0.4;
  /// 0 selects default_max_steps(path, step).
  std::size_t max_steps = 0;
  /// Leaving the world bounds grown by this fraction counts as divergence.
  double bounds_margin = 0.1;
  RenderConfig render;
};

struct TrajectoryLog {
  std::vector<Pose> poses;
  /// commands[i] moved the drone from poses[i] to poses[i + 1].
  std::vector<double> commands;
  /// Target waypoint index after arriving at poses[i].
  std::vector<std::size_t> target_indices;
  std::string path_id;
  Termination termination = Termination::kMaxSteps;

  std::vector<Point2> positions() const;
};

/// ceil(3 * path_length / step).
std::size_t default_max_steps(const Path& path, double step);

/// Advances `current_index` past every consecutive waypoint within
/// `capture_radius` of `position` (inclusive). Never decrements.
std::size_t advance_target(Point2 position, const Path& path,
                           std::size_t current_index, double capture_radius);

/// Closed-loop episode: render, query the policy, rotate, then step forward.
TrajectoryLog rollout(const Policy& policy, const LandmarkWorld& world,
                      const Path& path, const RolloutConfig& config);

}  // namespace pathfollow
