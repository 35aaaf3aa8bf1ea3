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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathfollow/augmentation.hpp"
#include "pathfollow/geometry.hpp"
#include "pathfollow/learner.hpp"
#include "pathfollow/simulator.hpp"

namespace pathfollow {

/// Mean over waypoints of the closest approach by any trajectory position.
double mean_waypoint_min_distance(const Path& path,
                                  std::span<const Point2> trajectory);

/// Indices of the two waypoints nearest to `p`, nearest first. Ties go to the
/// lower index.
std::pair<std::size_t, std::size_t> two_closest_waypoints(const Path& path,
                                                          Point2 p);

/// Mean over trajectory positions of the distance to the segment joining the
/// position's two nearest waypoints.
double mean_cross_track_distance(const Path& path,
                                 std::span<const Point2> trajectory);

/// Mean squared error between the unwrapped model output and the labels of
/// `test_set`. Inputs are normalized with the model's own stats.
double angle_mse(const RegressorModel& model, const Dataset& test_set);

struct MetricsReport {
  std::string path_id;
  double mwmd = 0.0;
  double mctd = 0.0;
  double sac = 0.0;
  std::optional<double> angle_mse;
  Termination termination = Termination::kMaxSteps;
  std::size_t steps = 0;
};

MetricsReport evaluate(const Path& path, const TrajectoryLog& trajectory,
                       const Dataset* test_set = nullptr,
                       const RegressorModel* model = nullptr);

/// Field-wise arithmetic mean (angle_mse only if present in every report).
/// The termination of the result is kCompleted only if every run completed.
MetricsReport average_reports(std::span<const MetricsReport> reports,
                              std::string path_id = "average");

}  // namespace pathfollow
