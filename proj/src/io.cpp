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

#include "pathfollow/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pathfollow/error.hpp"

namespace pathfollow::io {

using nlohmann::json;

namespace {

// Splits text into lines, dropping a trailing '\r' and a final empty line.
std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

std::string at_line(std::size_t index) {
  return "line " + std::to_string(index + 1);
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kFormat,
                std::string(what) + ": malformed JSON: " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key, std::string_view what) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kFormat, std::string(what) + ": field '" + key +
                                        "': " + e.what());
  }
}

json matrix_json(const RowMatrix& m) {
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"data", std::vector<double>(m.data(), m.data() + m.size())}};
}

RowMatrix matrix_from(const json& j, std::string_view what) {
  const auto rows = field<Eigen::Index>(j, "rows", what);
  const auto cols = field<Eigen::Index>(j, "cols", what);
  const auto data = field<std::vector<double>>(j, "data", what);
  if (rows < 0 || cols < 0 || static_cast<std::size_t>(rows * cols) != data.size()) {
    throw Error(ErrorKind::kFormat, std::string(what) + ": matrix shape mismatch");
  }
  RowMatrix m(rows, cols);
  std::copy(data.begin(), data.end(), m.data());
  return m;
}

void check_id(const std::string& id) {
  if (id.find_first_of(",\n\r") != std::string::npos) {
    throw Error(ErrorKind::kInvalidArgument,
                "path id '" + id + "' may not contain commas or newlines");
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view f, const std::string& where) {
  double v = 0.0;
  const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
  if (res.ec != std::errc() || res.ptr != f.data() + f.size() || f.empty()) {
    throw Error(ErrorKind::kFormat,
                where + ": expected a number, got '" + std::string(f) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view f, const std::string& where) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
  if (res.ec != std::errc() || res.ptr != f.data() + f.size() || f.empty()) {
    throw Error(ErrorKind::kFormat, where + ": expected a non-negative integer, got '" +
                                        std::string(f) + "'");
  }
  return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + file.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& file, std::string_view text) {
  std::error_code ec;
  if (file.has_parent_path()) {
    std::filesystem::create_directories(file.parent_path(), ec);
    if (ec) {
      throw Error(ErrorKind::kIo, "cannot create directory '" +
                                      file.parent_path().string() + "': " + ec.message());
    }
  }
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + file.string() + "'");
}

// ---- paths ----

std::string path_to_csv(const Path& path) {
  std::string out = "x,y\n";
  for (const Point2& p : path.waypoints()) {
    out += format_double(p.x) + "," + format_double(p.y) + "\n";
  }
  return out;
}

Path path_from_csv(std::string_view text, std::string id) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0] != "x,y") {
    throw Error(ErrorKind::kFormat, "path '" + id + "': line 1: expected header 'x,y'");
  }
  std::vector<Point2> w;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cols = split_csv(lines[i]);
    const std::string where = "path '" + id + "': " + at_line(i);
    if (cols.size() != 2) {
      throw Error(ErrorKind::kFormat, where + ": expected 2 columns, got " +
                                          std::to_string(cols.size()));
    }
    w.push_back({parse_double(cols[0], where), parse_double(cols[1], where)});
  }
  try {
    return Path(std::move(id), std::move(w));
  } catch (const Error& e) {
    throw Error(ErrorKind::kFormat, e.what());
  }
}

void save_path(const std::filesystem::path& file, const Path& path) {
  write_text_file(file, path_to_csv(path));
}

Path load_path(const std::filesystem::path& file) {
  return path_from_csv(read_text_file(file), file.stem().string());
}

// ---- world ----

std::string world_to_json(const LandmarkWorld& world) {
  json lms = json::array();
  for (const auto& lm : world.landmarks()) {
    lms.push_back({{"x", lm.position.x}, {"y", lm.position.y}, {"signature", lm.signature}});
  }
  const Rect& b = world.bounds();
  json j{{"seed", world.seed()},
         {"bounds", {{"min_x", b.min.x}, {"min_y", b.min.y}, {"max_x", b.max.x}, {"max_y", b.max.y}}},
         {"signature_dim", world.signature_dim()},
         {"landmarks", std::move(lms)}};
  return j.dump(1) + "\n";
}

LandmarkWorld world_from_json(std::string_view text) {
  constexpr std::string_view what = "world";
  const json j = parse_json(text, what);
  const json b = field<json>(j, "bounds", what);
  const Rect bounds{{field<double>(b, "min_x", what), field<double>(b, "min_y", what)},
                    {field<double>(b, "max_x", what), field<double>(b, "max_y", what)}};
  std::vector<Landmark> landmarks;
  for (const json& lm : field<json>(j, "landmarks", what)) {
    landmarks.push_back({{field<double>(lm, "x", what), field<double>(lm, "y", what)},
                         field<std::vector<double>>(lm, "signature", what)});
  }
  try {
    return LandmarkWorld(std::move(landmarks), bounds,
                         field<std::uint64_t>(j, "seed", what));
  } catch (const Error& e) {
    throw Error(ErrorKind::kFormat, std::string("world: ") + e.what());
  }
}

void save_world(const std::filesystem::path& file, const LandmarkWorld& world) {
  write_text_file(file, world_to_json(world));
}

LandmarkWorld load_world(const std::filesystem::path& file) {
  return world_from_json(read_text_file(file));
}

// ---- model ----

std::string model_to_json(const RegressorModel& model) {
  const auto& h = model.head;
  const auto& tc = model.train_config;
  json j{
      {"input_dim", model.input_dim()},
      {"projection_dim", model.projection.rows()},
      {"hidden_units", h.hidden()},
      {"init_seed", model.init_seed},
      {"train_config",
       {{"lr0", tc.lr0},
        {"batch_size", tc.batch_size},
        {"epochs", tc.epochs},
        {"lr_halving_period", tc.lr_halving_period},
        {"shuffle_seed", tc.shuffle_seed},
        {"projection_dim", tc.projection_dim},
        {"hidden_units", tc.hidden_units}}},
      {"feature_mean", model.feature_mean},
      {"feature_std", model.feature_std},
      {"projection", matrix_json(model.projection)},
      {"w1", matrix_json(h.w1())},
      {"b1", std::vector<double>(h.b1().begin(), h.b1().end())},
      {"w2", std::vector<double>(h.w2().begin(), h.w2().end())},
      {"b2", h.b2()},
  };
  return j.dump(1) + "\n";
}

RegressorModel model_from_json(std::string_view text) {
  constexpr std::string_view what = "model";
  const json j = parse_json(text, what);
  RegressorModel m;
  m.init_seed = field<std::uint64_t>(j, "init_seed", what);
  const json& tc = field<json>(j, "train_config", what);
  m.train_config.lr0 = field<double>(tc, "lr0", what);
  m.train_config.batch_size = field<std::size_t>(tc, "batch_size", what);
  m.train_config.epochs = field<std::size_t>(tc, "epochs", what);
  m.train_config.lr_halving_period = field<std::size_t>(tc, "lr_halving_period", what);
  m.train_config.shuffle_seed = field<std::uint64_t>(tc, "shuffle_seed", what);
  m.train_config.projection_dim = field<std::size_t>(tc, "projection_dim", what);
  m.train_config.hidden_units = field<std::size_t>(tc, "hidden_units", what);
  m.feature_mean = field<std::vector<double>>(j, "feature_mean", what);
  m.feature_std = field<std::vector<double>>(j, "feature_std", what);
  m.projection = matrix_from(field<json>(j, "projection", what), "model projection");

  const auto hidden = field<std::size_t>(j, "hidden_units", what);
  const auto proj = static_cast<std::size_t>(m.projection.rows());
  const auto input = static_cast<std::size_t>(m.projection.cols());
  if (field<std::size_t>(j, "input_dim", what) != input ||
      field<std::size_t>(j, "projection_dim", what) != proj ||
      m.feature_mean.size() != input || m.feature_std.size() != input) {
    throw Error(ErrorKind::kFormat, "model: inconsistent dimensions");
  }
  m.head = HeadParameters(hidden, proj);
  const RowMatrix w1 = matrix_from(field<json>(j, "w1", what), "model w1");
  const auto b1 = field<std::vector<double>>(j, "b1", what);
  const auto w2 = field<std::vector<double>>(j, "w2", what);
  if (static_cast<std::size_t>(w1.rows()) != hidden ||
      static_cast<std::size_t>(w1.cols()) != proj || b1.size() != hidden ||
      w2.size() != hidden) {
    throw Error(ErrorKind::kFormat, "model: head shape mismatch");
  }
  m.head.w1() = w1;
  std::copy(b1.begin(), b1.end(), m.head.b1().data());
  std::copy(w2.begin(), w2.end(), m.head.w2().data());
  m.head.b2() = field<double>(j, "b2", what);
  return m;
}

void save_model(const std::filesystem::path& file, const RegressorModel& model) {
  write_text_file(file, model_to_json(model));
}

RegressorModel load_model(const std::filesystem::path& file) {
  return model_from_json(read_text_file(file));
}

// ---- trajectory ----

std::string trajectory_to_csv(const TrajectoryLog& log) {
  std::string out(kTrajectoryHeader);
  out += '\n';
  for (std::size_t i = 0; i < log.poses.size(); ++i) {
    const Pose& p = log.poses[i];
    out += std::to_string(i) + "," + format_double(p.position.x) + "," +
           format_double(p.position.y) + "," + format_double(p.yaw.radians()) + ",";
    if (i > 0) out += format_double(log.commands[i - 1]);
    out += "," + std::to_string(log.target_indices[i]) + "\n";
  }
  return out;
}

TrajectoryLog trajectory_from_csv(std::string_view text, std::string path_id) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0] != kTrajectoryHeader) {
    throw Error(ErrorKind::kFormat, "trajectory: line 1: expected header '" +
                                        std::string(kTrajectoryHeader) + "'");
  }
  TrajectoryLog log;
  log.path_id = std::move(path_id);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string where = "trajectory: " + at_line(i);
    const auto c = split_csv(lines[i]);
    if (c.size() != 6) throw Error(ErrorKind::kFormat, where + ": expected 6 columns");
    if (parse_u64(c[0], where) != log.poses.size()) {
      throw Error(ErrorKind::kFormat, where + ": step out of sequence");
    }
    log.poses.push_back({{parse_double(c[1], where), parse_double(c[2], where)},
                         Angle::wrap(parse_double(c[3], where))});
    if (log.poses.size() == 1) {
      if (!c[4].empty()) throw Error(ErrorKind::kFormat, where + ": row 0 carries no command");
    } else {
      log.commands.push_back(parse_double(c[4], where));
    }
    log.target_indices.push_back(static_cast<std::size_t>(parse_u64(c[5], where)));
  }
  if (log.poses.empty()) throw Error(ErrorKind::kFormat, "trajectory: no rows");
  return log;
}

// ---- dataset ----

std::string dataset_to_csv(const Dataset& dataset) {
  const std::size_t dim =
      dataset.samples.empty() ? 0 : dataset.samples.front().observation.features.size();
  std::string out = "path_id,sweep,step,stream_tag,target_index,x,y,yaw";
  for (std::size_t j = 0; j < dim; ++j) out += ",f" + std::to_string(j);
  out += ",target\n";
  for (const auto& s : dataset.samples) {
    check_id(s.meta.path_id);
    out += s.meta.path_id + "," + std::to_string(s.meta.sweep_index) + "," +
           std::to_string(s.meta.step_index) + "," + std::to_string(s.meta.stream_tag) +
           "," + std::to_string(s.target_index) + "," + format_double(s.pose.position.x) +
           "," + format_double(s.pose.position.y) + "," +
           format_double(s.pose.yaw.radians());
    for (double f : s.observation.features) out += "," + format_double(f);
    out += "," + format_double(s.target.radians()) + "\n";
  }
  return out;
}

std::string normalization_to_json(const Dataset& dataset) {
  return json{{"mean", dataset.feature_mean}, {"std", dataset.feature_std}}.dump(1) + "\n";
}

Dataset dataset_from_csv(std::string_view csv, std::string_view sidecar, double fov) {
  const auto lines = lines_of(csv);
  if (lines.empty()) throw Error(ErrorKind::kFormat, "dataset: empty file");
  const auto header = split_csv(lines[0]);
  if (header.size() < 9 || header[0] != "path_id" || header.back() != "target") {
    throw Error(ErrorKind::kFormat, "dataset: line 1: unexpected header");
  }
  const std::size_t dim = header.size() - 9;
  Dataset ds;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string where = "dataset: " + at_line(i);
    const auto c = split_csv(lines[i]);
    if (c.size() != header.size()) {
      throw Error(ErrorKind::kFormat, where + ": expected " +
                                          std::to_string(header.size()) + " columns");
    }
    Sample s;
    s.meta.path_id = std::string(c[0]);
    s.meta.sweep_index = static_cast<std::size_t>(parse_u64(c[1], where));
    s.meta.step_index = static_cast<std::size_t>(parse_u64(c[2], where));
    s.meta.stream_tag = parse_u64(c[3], where);
    s.target_index = static_cast<std::size_t>(parse_u64(c[4], where));
    s.pose = {{parse_double(c[5], where), parse_double(c[6], where)},
              Angle::wrap(parse_double(c[7], where))};
    s.observation.fov = fov;
    s.observation.features.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      s.observation.features[j] = parse_double(c[8 + j], where);
    }
    s.target = Angle::wrap(parse_double(c.back(), where));
    ds.samples.push_back(std::move(s));
  }
  const json j = parse_json(sidecar, "normalization sidecar");
  ds.feature_mean = field<std::vector<double>>(j, "mean", "normalization sidecar");
  ds.feature_std = field<std::vector<double>>(j, "std", "normalization sidecar");
  if (ds.feature_mean.size() != dim || ds.feature_std.size() != dim) {
    throw Error(ErrorKind::kFormat, "normalization sidecar dimension mismatch");
  }
  return ds;
}

// ---- metrics ----

std::string metrics_to_json(const MetricsReport& r) {
  json j{{"path_id", r.path_id},
         {"mwmd", r.mwmd},
         {"mctd", r.mctd},
         {"sac", r.sac},
         {"angle_mse", r.angle_mse ? json(*r.angle_mse) : json(nullptr)},
         {"termination", std::string(to_string(r.termination))},
         {"steps", r.steps}};
  return j.dump(1) + "\n";
}

MetricsReport metrics_from_json(std::string_view text) {
  constexpr std::string_view what = "metrics";
  const json j = parse_json(text, what);
  MetricsReport r;
  r.path_id = field<std::string>(j, "path_id", what);
  r.mwmd = field<double>(j, "mwmd", what);
  r.mctd = field<double>(j, "mctd", what);
  r.sac = field<double>(j, "sac", what);
  if (j.contains("angle_mse") && !j.at("angle_mse").is_null()) {
    r.angle_mse = field<double>(j, "angle_mse", what);
  }
  try {
    r.termination = termination_from_string(field<std::string>(j, "termination", what));
  } catch (const Error& e) {
    throw Error(ErrorKind::kFormat, std::string("metrics: ") + e.what());
  }
  r.steps = field<std::size_t>(j, "steps", what);
  return r;
}

std::string metrics_csv_row(const MetricsReport& r) {
  check_id(r.path_id);
  return r.path_id + "," + format_double(r.mwmd) + "," + format_double(r.mctd) + "," +
         format_double(r.sac) + "," + (r.angle_mse ? format_double(*r.angle_mse) : "") +
         "," + std::string(to_string(r.termination)) + "," + std::to_string(r.steps) +
         "\n";
}

}  // namespace pathfollow::io
