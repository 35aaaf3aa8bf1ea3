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
#include <string>

#include "pathfollow/geometry.hpp"

namespace pathfollow {

struct PathGenConfig {
  double length = 150.0;           // meters, total polyline length
  double waypoint_spacing = 5.0;   // meters between consecutive waypoints
  double sac_budget = 5.0;         // radians of total absolute heading change
  /// The generated path is centered in these bounds and must keep
  /// `edge_clearance` meters from every edge.
  Rect bounds{{-100.0, -100.0}, {100.0, 100.0}};
  double edge_clearance = 10.0;
  /// Non-adjacent waypoints must stay at least this multiple of the spacing
  /// apart, so the route never folds back onto itself.
  double min_separation = 1.5;
  std::size_t max_attempts = 200;
};

/// Seeded random walk with a turn budget. Turn magnitudes are the budget split
/// by random weights, each turn's sign is random, so the realized
/// sum_angle_change equals the budget up to rounding. Attempts that violate
/// the bounds or separation constraints are redrawn from the same stream.
Path generate_path(std::uint64_t seed, std::string id,
                   const PathGenConfig& config);

}  // namespace pathfollow
