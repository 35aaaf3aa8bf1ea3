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

#include "pathfollow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pathfollow/error.hpp"

namespace pathfollow {

double mean_waypoint_min_distance(const Path& path,
                                  std::span<const Point2> trajectory) {
  if (trajectory.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "trajectory is empty");
  }
  double total = 0.0;
  for (const Point2& w : path.waypoints()) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point2& p : trajectory) best = std::min(best, distance(p, w));
    total += best;
  }
  return total / static_cast<double>(path.size());
}

std::pair<std::size_t, std::size_t> two_closest_waypoints(const Path& path,
                                                          Point2 p) {
  std::size_t first = 0, second = 1;
  double d_first = distance(p, path[0]);
  double d_second = distance(p, path[1]);
  if (d_second < d_first) {
    std::swap(first, second);
    std::swap(d_first, d_second);
  }
  for (std::size_t i = 2; i < path.size(); ++i) {
    const double d = distance(p, path[i]);
    // Strict comparisons keep the lower index on ties.
    if (d < d_first) {
      second = first;
      d_second = d_first;
      first = i;
      d_first = d;
    } else if (d < d_second) {
      second = i;
      d_second = d;
    }
  }
  return {first, second};
}

double mean_cross_track_distance(const Path& path,
                                 std::span<const Point2> trajectory) {
  if (trajectory.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "trajectory is empty");
  }
  double total = 0.0;
  for (const Point2& p : trajectory) {
    const auto [a, b] = two_closest_waypoints(path, p);
    total += point_segment_distance(p, path[a], path[b]);
  }
  return total / static_cast<double>(trajectory.size());
}

double angle_mse(const RegressorModel& model, const Dataset& test_set) {
  if (test_set.samples.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "test set is empty");
  }
  double total = 0.0;
  for (const auto& s : test_set.samples) {
    const auto x =
        normalize(model.feature_mean, model.feature_std, s.observation.features);
    const double r = forward_raw(model, x) - s.target.radians();
    total += r * r;
  }
  return total / static_cast<double>(test_set.samples.size());
}

MetricsReport evaluate(const Path& path, const TrajectoryLog& trajectory,
                       const Dataset* test_set, const RegressorModel* model) {
  if (trajectory.path_id != path.id()) {
    throw Error(ErrorKind::kInvalidArgument,
                "trajectory path id '" + trajectory.path_id +
                    "' does not match path '" + path.id() + "'");
  }
  const auto positions = trajectory.positions();
  MetricsReport r;
  r.path_id = path.id();
  r.mwmd = mean_waypoint_min_distance(path, positions);
  r.mctd = mean_cross_track_distance(path, positions);
  r.sac = sum_angle_change(path);
  r.termination = trajectory.termination;
  r.steps = trajectory.commands.size();
  if (test_set && model) r.angle_mse = angle_mse(*model, *test_set);
  return r;
}

MetricsReport average_reports(std::span<const MetricsReport> reports,
                              std::string path_id) {
  if (reports.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no reports to average");
  }
  MetricsReport avg;
  avg.path_id = std::move(path_id);
  avg.termination = Termination::kCompleted;
  bool all_mse = true;
  double mse = 0.0, steps = 0.0;
  for (const auto& r : reports) {
    avg.mwmd += r.mwmd;
    avg.mctd += r.mctd;
    avg.sac += r.sac;
    steps += static_cast<double>(r.steps);
    if (r.angle_mse) mse += *r.angle_mse; else all_mse = false;
    if (r.termination != Termination::kCompleted) avg.termination = r.termination;
  }
  const double n = static_cast<double>(reports.size());
  avg.mwmd /= n;
  avg.mctd /= n;
  avg.sac /= n;
  avg.steps = static_cast<std::size_t>(std::llround(steps / n));
  if (all_mse) avg.angle_mse = mse / n;
  return avg;
}

}  // namespace pathfollow
