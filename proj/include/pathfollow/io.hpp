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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pathfollow/augmentation.hpp"
#include "pathfollow/geometry.hpp"
#include "pathfollow/learner.hpp"
#include "pathfollow/metrics.hpp"
#include "pathfollow/simulator.hpp"
#include "pathfollow/world.hpp"

// File formats. Reals are written in the shortest decimal form that parses
// back to the same double, so every save/load pair is bit-exact.
namespace pathfollow::io {

std::string format_double(double v);
/// Parses a full field as a double; `where` prefixes the error message.
double parse_double(std::string_view field, const std::string& where);
std::uint64_t parse_u64(std::string_view field, const std::string& where);

std::string read_text_file(const std::filesystem::path& file);
/// Creates parent directories. Throws Error(kIo) on failure.
void write_text_file(const std::filesystem::path& file, std::string_view text);

// Path CSV: header "x,y", one waypoint per row.
std::string path_to_csv(const Path& path);
Path path_from_csv(std::string_view text, std::string id);
void save_path(const std::filesystem::path& file, const Path& path);
/// The path id is the file stem.
Path load_path(const std::filesystem::path& file);

// World JSON: {"seed", "bounds": {min_x, min_y, max_x, max_y},
// "signature_dim", "landmarks": [{"x", "y", "signature": [...]}]}.
std::string world_to_json(const LandmarkWorld& world);
LandmarkWorld world_from_json(std::string_view text);
void save_world(const std::filesystem::path& file, const LandmarkWorld& world);
LandmarkWorld load_world(const std::filesystem::path& file);

// Model JSON: shapes, row-major matrices, normalization stats, seeds and the
// training config.
std::string model_to_json(const RegressorModel& model);
RegressorModel model_from_json(std::string_view text);
void save_model(const std::filesystem::path& file, const RegressorModel& model);
RegressorModel load_model(const std::filesystem::path& file);

// Trajectory CSV: step,x,y,yaw,command,target_index. Row i holds pose i and
// the command that produced it, so row 0 has an empty command field.
inline constexpr std::string_view kTrajectoryHeader =
    "step,x,y,yaw,command,target_index";
std::string trajectory_to_csv(const TrajectoryLog& log);
TrajectoryLog trajectory_from_csv(std::string_view text, std::string path_id);

// Dataset CSV: path_id,sweep,step,stream_tag,target_index,x,y,yaw,f0..f{D-1},
// target. Normalization stats go to a JSON sidecar {"mean", "std"}.
std::string dataset_to_csv(const Dataset& dataset);
std::string normalization_to_json(const Dataset& dataset);
/// Rebuilds samples from CSV and stats from the sidecar. Observations get
/// `fov` since the CSV does not carry it.
Dataset dataset_from_csv(std::string_view csv, std::string_view sidecar,
                         double fov = kPi / 2.0);

std::string metrics_to_json(const MetricsReport& report);
MetricsReport metrics_from_json(std::string_view text);
inline constexpr std::string_view kMetricsCsvHeader =
    "path_id,mwmd,mctd,sac,angle_mse,termination,steps";
std::string metrics_csv_row(const MetricsReport& report);

/// Splits on commas; no quoting.
std::vector<std::string_view> split_csv(std::string_view line);

}  // namespace pathfollow::io
