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

#include "pathfollow/world.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pathfollow/error.hpp"
#include "pathfollow/rng.hpp"

namespace pathfollow {

LandmarkWorld::LandmarkWorld(std::vector<Landmark> landmarks, Rect bounds,
                             std::uint64_t seed)
    : landmarks_(std::move(landmarks)), bounds_(bounds), seed_(seed) {
  if (bounds_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "world bounds are empty");
  }
  if (landmarks_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "world needs at least one landmark");
  }
  const std::size_t dim = landmarks_.front().signature.size();
  if (dim == 0) {
    throw Error(ErrorKind::kInvalidArgument, "signature dimension must be >= 1");
  }
  for (std::size_t i = 0; i < landmarks_.size(); ++i) {
    const auto& lm = landmarks_[i];
    const std::string where = "landmark " + std::to_string(i);
    if (!lm.position.finite() || !bounds_.contains(lm.position)) {
      throw Error(ErrorKind::kInvalidArgument, where + " lies outside bounds");
    }
    if (lm.signature.size() != dim) {
      throw Error(ErrorKind::kInvalidArgument,
                  where + " has mismatched signature dimension");
    }
    double norm2 = 0.0;
    for (double s : lm.signature) {
      if (!std::isfinite(s) || s < 0.0) {
        throw Error(ErrorKind::kInvalidArgument,
                    where + " has a negative or non-finite signature entry");
      }
      norm2 += s * s;
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
      throw Error(ErrorKind::kInvalidArgument,
                  where + " signature is not unit norm");
    }
  }
}

LandmarkWorld generate_world(std::uint64_t seed, std::size_t n_landmarks,
                             std::size_t signature_dim, const Rect& bounds) {
  if (bounds.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "world bounds are empty");
  }
  if (n_landmarks == 0 || signature_dim == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "n_landmarks and signature_dim must be >= 1");
  }
  Rng rng(derive_seed(seed, "world"));
  std::vector<Landmark> landmarks;
  landmarks.reserve(n_landmarks);
  for (std::size_t i = 0; i < n_landmarks; ++i) {
    Landmark lm;
    lm.position = {rng.uniform(bounds.min.x, bounds.max.x),
                   rng.uniform(bounds.min.y, bounds.max.y)};
    lm.signature.resize(signature_dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (double& s : lm.signature) {
        s = std::abs(rng.normal());
        norm2 += s * s;
      }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& s : lm.signature) s *= inv;
    landmarks.push_back(std::move(lm));
  }
  return LandmarkWorld(std::move(landmarks), bounds, seed);
}

std::size_t bearing_bin(double beta, std::size_t bins, double fov) {
  const double width = fov / static_cast<double>(bins);
  const double pos = std::ceil((beta + fov / 2.0) / width) - 1.0;
  if (pos <= 0.0) return 0;
  return std::min(static_cast<std::size_t>(pos), bins - 1);
}

Observation render_observation(const LandmarkWorld& world, const Pose& pose,
                               const RenderConfig& render) {
  if (render.bins == 0) {
    throw Error(ErrorKind::kInvalidArgument, "bins must be >= 1");
  }
  if (!(render.fov > 0.0) || render.fov > kTwoPi) {
    throw Error(ErrorKind::kInvalidArgument, "fov must lie in (0, 2*pi]");
  }
  const std::size_t dim = world.signature_dim();
  Observation obs;
  obs.fov = render.fov;
  obs.features.assign(render.bins * dim, 0.0);
  const double half = render.fov / 2.0;
  for (const auto& lm : world.landmarks()) {
    const Point2 d = lm.position - pose.position;
    const double range = d.norm();
    const double beta =
        Angle::wrap(std::atan2(d.y, d.x) - pose.yaw.radians()).radians();
    if (std::abs(beta) > half) continue;
    const double intensity = 1.0 / (1.0 + range);
    double* bin = obs.features.data() + bearing_bin(beta, render.bins, render.fov) * dim;
    for (std::size_t c = 0; c < dim; ++c) bin[c] += lm.signature[c] * intensity;
  }
  return obs;
}

}  // namespace pathfollow
