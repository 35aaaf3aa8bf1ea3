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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pathfollow/augmentation.hpp"
#include "pathfollow/learner.hpp"
#include "pathfollow/path_gen.hpp"
#include "pathfollow/simulator.hpp"

namespace pathfollow {

/// Everything a run depends on. Every artifact of gen/pipeline/ablation is a
/// pure function of this struct.
struct RunConfig {
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "out";

  std::size_t n_landmarks = 400;
  std::size_t signature_dim = 8;
  double world_size = 200.0;  // square side, centered on the origin

  std::size_t n_paths = 1;
  PathGenConfig path;

  AugmentationConfig augmentation;  // seed is overwritten by `seed`
  TrainConfig train;                // shuffle_seed is derived per path
  RolloutConfig rollout;            // step/capture/render come from augmentation

  std::size_t test_sweeps = 4;
  std::vector<std::size_t> ablation_levels{1, 4, 8, 16};

  Rect world_bounds() const;
  /// Copies the shared knobs into the per-module configs.
  void sync();
  /// Throws Error(kConfig) with the offending key.
  void validate() const;
};

/// Parses `key = value` lines. Blank lines and lines starting with '#' are
/// ignored. Unknown keys, duplicates and bad values throw Error(kConfig).
/// Keys not mentioned keep their defaults.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& file);

/// Applies one override; same validation as a file line.
void set_config_value(RunConfig& config, std::string_view key,
                      std::string_view value);

/// Every key with its resolved value, in a fixed order. Parsing the output
/// yields an equal config.
std::string resolved_config(const RunConfig& config);

/// Keys accepted by parse_config, in resolved_config order.
std::vector<std::string_view> config_keys();

}  // namespace pathfollow
