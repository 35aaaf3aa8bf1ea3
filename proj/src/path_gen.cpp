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

#include "pathfollow/path_gen.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pathfollow/error.hpp"
#include "pathfollow/rng.hpp"

namespace pathfollow {

namespace {

bool well_separated(const std::vector<Point2>& w, double min_dist) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 2; j < w.size(); ++j) {
      if (distance(w[i], w[j]) < min_dist) return false;
    }
  }
  return true;
}

}  // namespace

Path generate_path(std::uint64_t seed, std::string id,
                   const PathGenConfig& config) {
  if (!(config.length > 0.0) || !(config.waypoint_spacing > 0.0) ||
      !(config.sac_budget >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "path length and spacing must be > 0, SAC budget >= 0");
  }
  if (config.bounds.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "path bounds are empty");
  }
  const auto segments = static_cast<std::size_t>(
      std::max(1.0, std::round(config.length / config.waypoint_spacing)));
  const double seg_len = config.length / static_cast<double>(segments);
  const std::size_t turns = segments - 1;
  if (config.sac_budget > 0.0 && turns == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "a non-zero SAC budget needs at least two segments");
  }

  Rng rng(derive_seed(seed, "path", fnv1a64(id)));
  const Point2 center{(config.bounds.min.x + config.bounds.max.x) / 2.0,
                      (config.bounds.min.y + config.bounds.max.y) / 2.0};
  const Rect inner{{config.bounds.min.x + config.edge_clearance,
                    config.bounds.min.y + config.edge_clearance},
                   {config.bounds.max.x - config.edge_clearance,
                    config.bounds.max.y - config.edge_clearance}};

  for (std::size_t attempt = 0; attempt < config.max_attempts; ++attempt) {
    std::vector<double> turn(turns, 0.0);
    if (turns > 0 && config.sac_budget > 0.0) {
      double total = 0.0;
      for (double& t : turn) {
        t = rng.uniform(0.25, 1.0);
        total += t;
      }
      for (double& t : turn) {
        t *= config.sac_budget / total;
        if (rng.uniform01() < 0.5) t = -t;
      }
    }
    if (std::any_of(turn.begin(), turn.end(),
                    [](double t) { return std::abs(t) >= 0.9 * kPi; })) {
      throw Error(ErrorKind::kInvalidArgument,
                  "SAC budget too large for the number of turns");
    }

    double heading = rng.uniform(-kPi, kPi);
    std::vector<Point2> w{{0.0, 0.0}};
    w.reserve(segments + 1);
    for (std::size_t i = 0; i < segments; ++i) {
      if (i > 0) heading += turn[i - 1];
      w.push_back(w.back() + seg_len * Point2{std::cos(heading), std::sin(heading)});
    }

    Point2 lo = w.front(), hi = w.front();
    for (const auto& p : w) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    const Point2 shift = center - 0.5 * (lo + hi);
    for (auto& p : w) p = p + shift;

    const bool inside = std::all_of(w.begin(), w.end(),
                                    [&](Point2 p) { return inner.contains(p); });
    if (inside && well_separated(w, config.min_separation * seg_len)) {
      return Path(std::move(id), std::move(w));
    }
  }
  throw Error(ErrorKind::kStage,
              "could not place path '" + id + "' inside bounds after " +
                  std::to_string(config.max_attempts) + " attempts");
}

}  // namespace pathfollow
