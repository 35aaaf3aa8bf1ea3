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

#include "pathfollow/simulator.hpp"

#include <cmath>

#include "pathfollow/error.hpp"

namespace pathfollow {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double ModelPolicy::operator()(const Observation& observation) const {
  const auto x =
      normalize(model->feature_mean, model->feature_std, observation.features);
  const double raw = forward_raw(*model, x);
  if (!std::isfinite(raw)) return raw;
  return Angle::wrap(raw).radians();
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kCompleted: return "completed";
    case Termination::kMaxSteps: return "max_steps";
    case Termination::kDiverged: return "diverged";
  }
  return "unknown";
}

Termination termination_from_string(std::string_view s) {
  if (s == "completed") return Termination::kCompleted;
  if (s == "max_steps") return Termination::kMaxSteps;
  if (s == "diverged") return Termination::kDiverged;
  throw Error(ErrorKind::kFormat, "unknown termination '" + std::string(s) + "'");
}

std::vector<Point2> TrajectoryLog::positions() const {
  std::vector<Point2> out;
  out.reserve(poses.size());
  for (const auto& p : poses) out.push_back(p.position);
  return out;
}

std::size_t default_max_steps(const Path& path, double step) {
  return static_cast<std::size_t>(std::ceil(3.0 * path_length(path) / step));
}

std::size_t advance_target(Point2 position, const Path& path,
                           std::size_t current_index, double capture_radius) {
  std::size_t i = current_index;
  while (i < path.size() && distance(position, path[i]) <= capture_radius) ++i;
  return i;
}

TrajectoryLog rollout(const Policy& policy, const LandmarkWorld& world,
                      const Path& path, const RolloutConfig& config) {
  if (!(config.step > 0.0) || !(config.capture_radius >= config.step)) {
    throw Error(ErrorKind::kInvalidArgument,
                "rollout needs step > 0 and capture_radius >= step");
  }
  if (const auto* mp = std::get_if<ModelPolicy>(&policy); mp && !mp->model) {
    throw Error(ErrorKind::kInvalidArgument, "model policy has no model");
  }
  const std::size_t max_steps =
      config.max_steps > 0 ? config.max_steps : default_max_steps(path, config.step);
  const Rect arena = world.bounds().expanded(config.bounds_margin);

  TrajectoryLog log;
  log.path_id = path.id();
  Pose pose{path[0], bearing(path[0], path[1])};
  std::size_t target = advance_target(pose.position, path, 1, config.capture_radius);
  log.poses.push_back(pose);
  log.target_indices.push_back(target);

  for (;;) {
    if (target >= path.size()) {
      log.termination = Termination::kCompleted;
      break;
    }
    if (log.commands.size() >= max_steps) {
      log.termination = Termination::kMaxSteps;
      break;
    }
    const double delta = std::visit(
        Overloaded{
            [&](const OraclePolicy& p) { return p(pose, path[target]); },
            [&](const ModelPolicy& p) {
              return p(render_observation(world, pose, config.render));
            },
            [&](const ConstantPolicy& p) { return p(); },
        },
        policy);
    if (!std::isfinite(delta)) {
      log.termination = Termination::kDiverged;
      break;
    }
    pose.yaw = Angle::wrap(pose.yaw.radians() + delta);
    pose.position = pose.position + config.step * heading_vector(pose.yaw);
    target = advance_target(pose.position, path, target, config.capture_radius);
    log.commands.push_back(delta);
    log.poses.push_back(pose);
    log.target_indices.push_back(target);
    if (!arena.contains(pose.position)) {
      log.termination = Termination::kDiverged;
      break;
    }
  }
  return log;
}

}  // namespace pathfollow
