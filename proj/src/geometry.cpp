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

#include "pathfollow/geometry.hpp"

#include <algorithm>

#include "pathfollow/error.hpp"

namespace pathfollow {

Angle Angle::wrap(double raw) {
  if (!std::isfinite(raw)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite angle");
  }
  // std::remainder is exact and lands in [-pi, pi].
  double r = std::remainder(raw, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return Angle(r);
}

Angle bearing(Point2 from, Point2 to) {
  return Angle::wrap(std::atan2(to.y - from.y, to.x - from.x));
}

Rect Rect::expanded(double fraction) const {
  const double dx = fraction * width();
  const double dy = fraction * height();
  return {{min.x - dx, min.y - dy}, {max.x + dx, max.y + dy}};
}

Path::Path(std::string id, std::vector<Point2> waypoints)
    : id_(std::move(id)), waypoints_(std::move(waypoints)) {
  if (waypoints_.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "path '" + id_ + "' must have length >= 2 waypoints");
  }
  for (std::size_t i = 0; i < waypoints_.size(); ++i) {
    if (!waypoints_[i].finite()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "path '" + id_ + "' waypoint " + std::to_string(i) +
                      " is not finite");
    }
    if (i > 0 && waypoints_[i] == waypoints_[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "path '" + id_ + "' has a zero-length segment at waypoint " +
                      std::to_string(i));
    }
  }
}

Angle target_yaw_delta(const Pose& pose, Point2 next_waypoint) {
  if (pose.position == next_waypoint) {
    throw Error(ErrorKind::kInvalidArgument, "degenerate bearing");
  }
  return Angle::wrap(bearing(pose.position, next_waypoint).radians() -
                     pose.yaw.radians());
}

double path_length(const Path& path) {
  double total = 0.0;
  const auto w = path.waypoints();
  for (std::size_t i = 1; i < w.size(); ++i) total += distance(w[i - 1], w[i]);
  return total;
}

double sum_angle_change(const Path& path) {
  const auto w = path.waypoints();
  if (w.size() < 3) return 0.0;
  double total = 0.0;
  Angle prev = bearing(w[0], w[1]);
  for (std::size_t i = 2; i < w.size(); ++i) {
    const Angle cur = bearing(w[i - 1], w[i]);
    total += std::abs((cur - prev).radians());
    prev = cur;
  }
  return total;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

}  // namespace pathfollow
