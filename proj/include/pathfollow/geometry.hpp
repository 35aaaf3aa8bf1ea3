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

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace pathfollow {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Planar angle in radians, normalized to (-pi, pi]. Counterclockwise is
/// positive and zero points along +x.
class Angle {
 public:
  constexpr Angle() = default;

  /// Normalizes `raw` into (-pi, pi]. Throws on non-finite input.
  static Angle wrap(double raw);

  double radians() const noexcept { return value_; }

  friend Angle operator+(Angle a, Angle b) { return wrap(a.value_ + b.value_); }
  friend Angle operator-(Angle a, Angle b) { return wrap(a.value_ - b.value_); }
  friend bool operator==(Angle a, Angle b) = default;

 private:
  explicit constexpr Angle(double v) : value_(v) {}
  double value_ = 0.0;
};

/// Free-function form of Angle::wrap.
inline Angle wrap_angle(double raw) { return Angle::wrap(raw); }

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;

  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double distance(Point2 a, Point2 b) { return (b - a).norm(); }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

/// Heading of the vector from `from` to `to`, in (-pi, pi].
Angle bearing(Point2 from, Point2 to);

/// Unit vector along `heading`.
inline Point2 heading_vector(Angle heading) {
  return {std::cos(heading.radians()), std::sin(heading.radians())};
}

struct Pose {
  Point2 position;
  Angle yaw;

  friend bool operator==(const Pose&, const Pose&) = default;
};

/// Axis-aligned rectangle, min corner inclusive.
struct Rect {
  Point2 min;
  Point2 max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  bool empty() const { return !(width() > 0.0) || !(height() > 0.0); }
  bool contains(Point2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  /// Grows each side by `fraction` of the corresponding extent.
  Rect expanded(double fraction) const;

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Ordered waypoint route. At least two waypoints, all finite, no two
/// consecutive waypoints identical.
class Path {
 public:
  Path(std::string id, std::vector<Point2> waypoints);

  const std::string& id() const noexcept { return id_; }
  std::span<const Point2> waypoints() const noexcept { return waypoints_; }
  std::size_t size() const noexcept { return waypoints_.size(); }
  const Point2& operator[](std::size_t i) const { return waypoints_[i]; }

 private:
  std::string id_;
  std::vector<Point2> waypoints_;
};

/// Signed rotation that turns `pose.yaw` to face `next_waypoint`.
/// Throws when the waypoint coincides with the pose position.
Angle target_yaw_delta(const Pose& pose, Point2 next_waypoint);

/// Sum of Euclidean distances between successive waypoints.
double path_length(const Path& path);

/// Sum over consecutive segment pairs of the absolute wrapped heading change.
/// Zero for two-waypoint paths.
double sum_angle_change(const Path& path);

/// Distance from `p` to the closed segment [a, b]. Degenerates to the
/// endpoint distance when a == b.
double point_segment_distance(Point2 p, Point2 a, Point2 b);

}  // namespace pathfollow
