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

#include "pathfollow/pipeline.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "pathfollow/error.hpp"
#include "pathfollow/io.hpp"
#include "pathfollow/path_gen.hpp"
#include "pathfollow/rng.hpp"
#include "pathfollow/svg.hpp"

namespace pathfollow {

namespace fs = std::filesystem;
using nlohmann::json;

std::string path_id(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "path_%02zu", index);
  return buf;
}

LandmarkWorld make_world(const RunConfig& config) {
  return generate_world(config.seed, config.n_landmarks, config.signature_dim,
                        config.world_bounds());
}

std::vector<Path> make_paths(const RunConfig& config) {
  RunConfig c = config;
  c.sync();
  std::vector<Path> paths;
  paths.reserve(c.n_paths);
  for (std::size_t i = 0; i < c.n_paths; ++i) {
    paths.push_back(generate_path(c.seed, path_id(i), c.path));
  }
  return paths;
}

std::uint64_t model_init_seed(const RunConfig& config, const Path& path,
                              std::size_t n_sweeps) {
  return derive_seed(config.seed, "model/init", path.id(), n_sweeps);
}

std::uint64_t model_shuffle_seed(const RunConfig& config, const Path& path,
                                 std::size_t n_sweeps) {
  return derive_seed(config.seed, "model/shuffle", path.id(), n_sweeps);
}

LevelResult train_and_evaluate(const LandmarkWorld& world, const Path& path,
                               const RunConfig& config, std::size_t n_sweeps,
                               const Dataset* test_set) {
  RunConfig c = config;
  c.sync();
  c.augmentation.n_augmented = n_sweeps;
  c.train.shuffle_seed = model_shuffle_seed(c, path, n_sweeps);

  LevelResult r;
  r.n_sweeps = n_sweeps;
  r.dataset = build_dataset(path, c.augmentation, world);
  TrainResult trained = train(r.dataset, c.train, model_init_seed(c, path, n_sweeps));
  r.model = std::move(trained.model);
  r.loss_history = std::move(trained.loss_history);
  r.trajectory = rollout(ModelPolicy{&r.model}, world, path, c.rollout);
  r.report = evaluate(path, r.trajectory, test_set, test_set ? &r.model : nullptr);
  return r;
}

std::vector<PathSummary> run_gen(const RunConfig& config) {
  const fs::path out = config.output_dir;
  io::save_world(out / "world.json", make_world(config));
  std::vector<PathSummary> summaries;
  std::string table = "path_id,waypoints,length,sac\n";
  for (const Path& p : make_paths(config)) {
    io::save_path(out / "paths" / (p.id() + ".csv"), p);
    PathSummary s{p.id(), path_length(p), sum_angle_change(p), p.size()};
    table += s.path_id + "," + std::to_string(s.waypoints) + "," +
             io::format_double(s.length) + "," + io::format_double(s.sac) + "\n";
    summaries.push_back(std::move(s));
  }
  io::write_text_file(out / "paths.csv", table);
  io::write_text_file(out / "config.resolved", resolved_config(config));
  return summaries;
}

std::vector<Path> load_generated_paths(const fs::path& output_dir) {
  const fs::path dir = output_dir / "paths";
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::kStage, "no paths directory at '" + dir.string() +
                                       "'; run gen first");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw Error(ErrorKind::kStage, "no path CSVs in '" + dir.string() + "'");
  }
  std::vector<Path> paths;
  for (const auto& f : files) paths.push_back(io::load_path(f));
  return paths;
}

namespace {

LandmarkWorld load_generated_world(const fs::path& output_dir) {
  const fs::path file = output_dir / "world.json";
  if (!fs::exists(file)) {
    throw Error(ErrorKind::kStage, "no world at '" + file.string() + "'; run gen first");
  }
  return io::load_world(file);
}

}  // namespace

std::vector<PathRun> run_pipeline(const RunConfig& config) {
  const fs::path out = config.output_dir;
  const LandmarkWorld world = load_generated_world(out);
  const std::vector<Path> paths = load_generated_paths(out);
  io::write_text_file(out / "config.resolved", resolved_config(config));

  std::vector<PathRun> runs;
  std::string metrics_csv(io::kMetricsCsvHeader);
  metrics_csv += '\n';
  for (const Path& path : paths) {
    PathRun run;
    run.path_id = path.id();
    run.length = path_length(path);
    run.sac = sum_angle_change(path);
    const fs::path dir = out / "runs" / path.id();
    try {
      RunConfig c = config;
      c.sync();
      const Dataset test = build_test_set(path, c.augmentation, world, c.test_sweeps);
      LevelResult r = train_and_evaluate(world, path, c, c.augmentation.n_augmented, &test);
      run.samples = r.dataset.samples.size();
      io::write_text_file(dir / "dataset.csv", io::dataset_to_csv(r.dataset));
      io::write_text_file(dir / "dataset_norm.json", io::normalization_to_json(r.dataset));
      io::save_model(dir / "model.json", r.model);
      io::write_text_file(dir / "trajectory.csv", io::trajectory_to_csv(r.trajectory));
      io::write_text_file(dir / "metrics.json", io::metrics_to_json(r.report));
      const std::vector<std::vector<Point2>> trajs{r.trajectory.positions()};
      io::write_text_file(dir / "plot.svg", svg::path_plot(path, trajs));
      metrics_csv += io::metrics_csv_row(r.report);
      run.metrics = r.report;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kIo) throw;
      run.error = e.what();
    }
    runs.push_back(std::move(run));
  }

  json rows = json::array();
  std::string manifest_csv = "path_id,status,samples,length,sac,mwmd,mctd,termination,error\n";
  for (const auto& r : runs) {
    json row{{"path_id", r.path_id},
             {"status", r.error ? "failed" : "ok"},
             {"samples", r.samples},
             {"length", r.length},
             {"sac", r.sac}};
    manifest_csv += r.path_id + "," + (r.error ? "failed" : "ok") + "," +
                    std::to_string(r.samples) + "," + io::format_double(r.length) + "," +
                    io::format_double(r.sac) + ",";
    if (r.metrics) {
      row["mwmd"] = r.metrics->mwmd;
      row["mctd"] = r.metrics->mctd;
      row["termination"] = std::string(to_string(r.metrics->termination));
      manifest_csv += io::format_double(r.metrics->mwmd) + "," +
                      io::format_double(r.metrics->mctd) + "," +
                      std::string(to_string(r.metrics->termination)) + ",";
    } else {
      manifest_csv += ",,,";
    }
    if (r.error) {
      row["error"] = *r.error;
      std::string msg = *r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      manifest_csv += msg;
    }
    manifest_csv += "\n";
    rows.push_back(std::move(row));
  }
  io::write_text_file(out / "manifest.json", json{{"paths", rows}}.dump(1) + "\n");
  io::write_text_file(out / "manifest.csv", manifest_csv);
  io::write_text_file(out / "metrics.csv", metrics_csv);
  return runs;
}

std::vector<AblationRow> run_ablation(const RunConfig& config) {
  const fs::path out = config.output_dir;
  const LandmarkWorld world = load_generated_world(out);
  const std::vector<Path> paths = load_generated_paths(out);
  io::write_text_file(out / "config.resolved", resolved_config(config));
  RunConfig c = config;
  c.sync();

  std::vector<AblationRow> rows;
  std::string csv = "path_id,k,angle_mse,mctd,termination,error\n";
  for (const Path& path : paths) {
    svg::Series series{path.id(), {}};
    std::optional<Dataset> test;
    for (std::size_t k : c.ablation_levels) {
      AblationRow row;
      row.path_id = path.id();
      row.n_sweeps = k;
      try {
        if (!test) test = build_test_set(path, c.augmentation, world, c.test_sweeps);
        const LevelResult r = train_and_evaluate(world, path, c, k, &*test);
        row.angle_mse = *r.report.angle_mse;
        row.mctd = r.report.mctd;
        row.termination = r.report.termination;
        series.points.push_back({static_cast<double>(k), row.angle_mse});
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kIo) throw;
        row.error = e.what();
      }
      csv += row.path_id + "," + std::to_string(k) + ",";
      if (row.error) {
        std::string msg = *row.error;
        std::replace(msg.begin(), msg.end(), ',', ';');
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        csv += ",,," + msg + "\n";
      } else {
        csv += io::format_double(row.angle_mse) + "," + io::format_double(row.mctd) + "," +
               std::string(to_string(row.termination)) + ",\n";
      }
      rows.push_back(std::move(row));
    }
    if (!series.points.empty()) {
      const std::vector<svg::Series> s{series};
      io::write_text_file(out / "ablation" / (path.id() + ".svg"),
                          svg::line_plot(s, "training sweeps k", "held-out angle MSE (rad^2)",
                                         "Augmentation ablation: " + path.id()));
    }
  }
  io::write_text_file(out / "ablation" / "ablation.csv", csv);
  return rows;
}

}  // namespace pathfollow
