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
#include <vector>

#include "pathfollow/geometry.hpp"

namespace pathfollow {

struct Landmark {
  Point2 position;
  /// Non-negative, unit Euclidean norm.
  std::vector<double> signature;
};

/// Landmark map standing in for a visually textured environment. Immutable
/// once built; rendering is a pure function of (world, pose).
class LandmarkWorld {
 public:
  LandmarkWorld(std::vector<Landmark> landmarks, Rect bounds,
                std::uint64_t seed);

  const std::vector<Landmark>& landmarks() const noexcept { return landmarks_; }
  const Rect& bounds() const noexcept { return bounds_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t signature_dim() const noexcept {
    return landmarks_.front().signature.size();
  }

 private:
  std::vector<Landmark> landmarks_;
  Rect bounds_;
  std::uint64_t seed_;
};

/// Landmarks uniform over `bounds`; signatures are |N(0, I)| draws projected
/// onto the unit sphere (positive orthant). Deterministic per seed.
LandmarkWorld generate_world(std::uint64_t seed, std::size_t n_landmarks,
                             std::size_t signature_dim, const Rect& bounds);

struct RenderConfig {
  std::size_t bins = 32;
  double fov = kPi / 2.0;  // 90 degrees
};

/// Bearing-binned landmark image. Layout is bin-major:
/// features[bin * signature_dim + channel].
struct Observation {
  std::vector<double> features;
  double fov = kPi / 2.0;
};

/// Index of the bin covering relative bearing `beta` (|beta| <= fov / 2).
/// Bins are uniform over [-fov/2, fov/2]; edges go to the lower bin.
std::size_t bearing_bin(double beta, std::size_t bins, double fov);

/// Renders the observation at `pose`. Each landmark whose relative bearing
/// lies within fov/2 adds signature / (1 + range) into its bin.
Observation render_observation(const LandmarkWorld& world, const Pose& pose,
                               const RenderConfig& render);

}  // namespace pathfollow
