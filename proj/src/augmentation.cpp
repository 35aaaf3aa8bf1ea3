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

#include "pathfollow/augmentation.hpp"

#include <cmath>
#include <string>

#include "pathfollow/error.hpp"
#include "pathfollow/rng.hpp"
#include "pathfollow/simulator.hpp"

namespace pathfollow {

namespace {

struct WalkStep {
  Pose pose;
  std::size_t target_index;
};

struct Walk {
  std::vector<WalkStep> steps;  // one per emitted sample
  Pose final_pose;
};

// The optimal fixed-step walk shared by every sweep of a path.
Walk optimal_walk(const Path& path, const AugmentationConfig& config) {
  const auto w = path.waypoints();
  Walk walk;
  Pose pose{w[0], bearing(w[0], w[1])};
  std::size_t target = advance_target(pose.position, path, 1, config.capture_radius);
  const std::size_t budget = default_max_steps(path, config.step);
  while (target < w.size()) {
    if (walk.steps.size() >= budget) {
      throw Error(ErrorKind::kStage,
                  "path '" + path.id() + "': waypoint " + std::to_string(target) +
                      " not reached within " + std::to_string(budget) + " steps");
    }
    walk.steps.push_back({pose, target});
    pose.yaw = bearing(pose.position, w[target]);
    pose.position = pose.position + config.step * heading_vector(pose.yaw);
    target = advance_target(pose.position, path, target, config.capture_radius);
  }
  walk.final_pose = pose;
  return walk;
}

Sample make_sample(const Path& path, const LandmarkWorld& world,
                   const AugmentationConfig& config, const Pose& pose,
                   std::size_t target, SampleMeta meta) {
  Sample s;
  s.observation = render_observation(world, pose, config.render);
  s.target = target_yaw_delta(pose, path[target]);
  s.pose = pose;
  s.target_index = target;
  s.meta = std::move(meta);
  return s;
}

}  // namespace

void AugmentationConfig::validate() const {
  if (!(pos_jitter >= 0.0) || !(yaw_jitter >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "jitters must be >= 0");
  }
  if (!(step > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "step must be > 0");
  }
  if (!(capture_radius >= step)) {
    throw Error(ErrorKind::kInvalidArgument, "capture_radius must be >= step");
  }
}

Sweep sweep_optimal(const Path& path, const AugmentationConfig& config,
                    const LandmarkWorld& world) {
  config.validate();
  const Walk walk = optimal_walk(path, config);
  Sweep sweep;
  sweep.poses.reserve(walk.steps.size() + 1);
  sweep.samples.reserve(walk.steps.size());
  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    const auto& st = walk.steps[i];
    sweep.poses.push_back(st.pose);
    sweep.samples.push_back(make_sample(path, world, config, st.pose,
                                        st.target_index, {path.id(), 0, i, 0}));
  }
  sweep.poses.push_back(walk.final_pose);
  return sweep;
}

std::uint64_t sweep_stream_seed(const AugmentationConfig& config,
                                const Path& path, std::size_t sweep_index,
                                std::string_view domain) {
  return derive_seed(config.seed, domain, path.id(), sweep_index);
}

std::vector<Sample> sweep_jittered(const Path& path,
                                   const AugmentationConfig& config,
                                   const LandmarkWorld& world,
                                   std::size_t sweep_index,
                                   std::string_view domain) {
  config.validate();
  const Walk walk = optimal_walk(path, config);
  const std::uint64_t tag = sweep_stream_seed(config, path, sweep_index, domain);
  Rng rng(tag);
  std::vector<Sample> samples;
  samples.reserve(walk.steps.size());
  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    const auto& st = walk.steps[i];
    const double dx = rng.symmetric(config.pos_jitter);
    const double dy = rng.symmetric(config.pos_jitter);
    const double dyaw = rng.symmetric(config.yaw_jitter);
    const Pose perturbed{st.pose.position + Point2{dx, dy},
                         Angle::wrap(st.pose.yaw.radians() + dyaw)};
    samples.push_back(make_sample(path, world, config, perturbed, st.target_index,
                                  {path.id(), sweep_index, i, tag}));
  }
  return samples;
}

void compute_normalization(Dataset& dataset) {
  if (dataset.samples.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "dataset is empty");
  }
  const std::size_t dim = dataset.samples.front().observation.features.size();
  std::vector<double> mean(dim, 0.0);
  for (const auto& s : dataset.samples) {
    if (s.observation.features.size() != dim) {
      throw Error(ErrorKind::kInvalidArgument,
                  "samples have mismatched observation dimensions");
    }
    for (std::size_t j = 0; j < dim; ++j) mean[j] += s.observation.features[j];
  }
  const double n = static_cast<double>(dataset.samples.size());
  for (double& m : mean) m /= n;
  std::vector<double> var(dim, 0.0);
  for (const auto& s : dataset.samples) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = s.observation.features[j] - mean[j];
      var[j] += d * d;
    }
  }
  std::vector<double> stddev(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    stddev[j] = std::max(std::sqrt(var[j] / n), kStdFloor);
  }
  dataset.feature_mean = std::move(mean);
  dataset.feature_std = std::move(stddev);
}

Dataset build_dataset(const Path& path, const AugmentationConfig& config,
                      const LandmarkWorld& world) {
  config.validate();
  if (config.n_augmented < 1) {
    throw Error(ErrorKind::kInvalidArgument, "n_augmented must be >= 1");
  }
  Dataset ds;
  ds.samples = sweep_optimal(path, config, world).samples;
  for (std::size_t k = 1; k < config.n_augmented; ++k) {
    auto sweep = sweep_jittered(path, config, world, k, kTrainStream);
    ds.samples.insert(ds.samples.end(), std::make_move_iterator(sweep.begin()),
                      std::make_move_iterator(sweep.end()));
  }
  compute_normalization(ds);
  return ds;
}

Dataset build_test_set(const Path& path, const AugmentationConfig& config,
                       const LandmarkWorld& world, std::size_t n_sweeps) {
  if (n_sweeps < 1) {
    throw Error(ErrorKind::kInvalidArgument, "test set needs at least one sweep");
  }
  Dataset ds;
  for (std::size_t k = 0; k < n_sweeps; ++k) {
    auto sweep = sweep_jittered(path, config, world, k, kTestStream);
    ds.samples.insert(ds.samples.end(), std::make_move_iterator(sweep.begin()),
                      std::make_move_iterator(sweep.end()));
  }
  compute_normalization(ds);
  return ds;
}

std::vector<double> normalize(std::span<const double> mean,
                              std::span<const double> stddev,
                              std::span<const double> features) {
  if (features.size() != mean.size() || stddev.size() != mean.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "observation dimension " + std::to_string(features.size()) +
                    " does not match normalization dimension " +
                    std::to_string(mean.size()));
  }
  std::vector<double> out(features.size());
  for (std::size_t j = 0; j < features.size(); ++j) {
    out[j] = (features[j] - mean[j]) / stddev[j];
  }
  return out;
}

std::vector<double> normalize(const Dataset& dataset,
                              const Observation& observation) {
  return normalize(dataset.feature_mean, dataset.feature_std,
                   observation.features);
}

}  // namespace pathfollow
