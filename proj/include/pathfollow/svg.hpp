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

#include <span>
#include <string>
#include <vector>

#include "pathfollow/geometry.hpp"

namespace pathfollow::svg {

/// Reference path as one circle per waypoint plus one polyline per
/// trajectory, fitted to a square canvas. World y points up.
std::string path_plot(const Path& path,
                      std::span<const std::vector<Point2>> trajectories,
                      double canvas = 600.0);

struct Series {
  std::string label;
  std::vector<Point2> points;  // data coordinates
};

/// Line plot with axes, tick labels at the data extremes, and one polyline
/// plus circle markers per series.
std::string line_plot(std::span<const Series> series, const std::string& x_label,
                      const std::string& y_label, const std::string& title);

}  // namespace pathfollow::svg
