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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pathfollow/augmentation.hpp"
#include "pathfollow/config.hpp"
#include "pathfollow/learner.hpp"
#include "pathfollow/metrics.hpp"
#include "pathfollow/simulator.hpp"
#include "pathfollow/world.hpp"

namespace pathfollow {

// In-memory scenario -----------------------------------------------------

LandmarkWorld make_world(const RunConfig& config);
/// Path ids are "path_00", "path_01", ...
std::vector<Path> make_paths(const RunConfig& config);
std::string path_id(std::size_t index);

/// Seeds for the model of `path` trained on `n_sweeps` sweeps.
std::uint64_t model_init_seed(const RunConfig& config, const Path& path,
                              std::size_t n_sweeps);
std::uint64_t model_shuffle_seed(const RunConfig& config, const Path& path,
                                 std::size_t n_sweeps);

struct LevelResult {
  std::size_t n_sweeps = 0;
  Dataset dataset;
  RegressorModel model;
  std::vector<double> loss_history;
  TrajectoryLog trajectory;
  MetricsReport report;  // angle_mse set when a test set was given
};

/// build_dataset -> train -> rollout(ModelPolicy) -> evaluate, for one path
/// and one augmentation level.
LevelResult train_and_evaluate(const LandmarkWorld& world, const Path& path,
                               const RunConfig& config, std::size_t n_sweeps,
                               const Dataset* test_set = nullptr);

// Commands writing to config.output_dir ----------------------------------

struct PathSummary {
  std::string path_id;
  double length = 0.0;
  double sac = 0.0;
  std::size_t waypoints = 0;
};

/// Writes world.json, paths/<id>.csv and paths.csv (id, length, SAC).
std::vector<PathSummary> run_gen(const RunConfig& config);

struct PathRun {
  std::string path_id;
  std::optional<std::string> error;  // set when a stage failed
  std::size_t samples = 0;
  double length = 0.0;
  double sac = 0.0;
  std::optional<MetricsReport> metrics;
};

/// Reads world.json and paths/*.csv from the output dir, then for each path
/// writes runs/<id>/{dataset.csv, dataset_norm.json, model.json,
/// trajectory.csv, metrics.json, plot.svg}. A failing path is recorded in
/// manifest.json/manifest.csv and the rest proceed. Also writes metrics.csv
/// and config.resolved.
std::vector<PathRun> run_pipeline(const RunConfig& config);

struct AblationRow {
  std::string path_id;
  std::size_t n_sweeps = 0;
  double angle_mse = 0.0;
  double mctd = 0.0;
  Termination termination = Termination::kMaxSteps;
  std::optional<std::string> error;
};

/// For each path and level: train, score on config.test_sweeps held-out
/// sweeps, roll out. Writes ablation/ablation.csv and one
/// ablation/<id>.svg per path.
std::vector<AblationRow> run_ablation(const RunConfig& config);

/// Loads the paths written by run_gen, sorted by id.
std::vector<Path> load_generated_paths(const std::filesystem::path& output_dir);

}  // namespace pathfollow
