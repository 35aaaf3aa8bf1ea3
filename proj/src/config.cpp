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

#include "pathfollow/config.hpp"

#include <functional>
#include <set>

#include "pathfollow/error.hpp"
#include "pathfollow/io.hpp"

namespace pathfollow {

namespace {

struct Key {
  std::string_view name;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, std::string_view)> set;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string key_where(std::string_view key) {
  return "config key '" + std::string(key) + "'";
}

double to_double(std::string_view key, std::string_view v) {
  try {
    return io::parse_double(v, key_where(key));
  } catch (const Error& e) {
    throw Error(ErrorKind::kConfig, e.what());
  }
}

std::uint64_t to_u64(std::string_view key, std::string_view v) {
  try {
    return io::parse_u64(v, key_where(key));
  } catch (const Error& e) {
    throw Error(ErrorKind::kConfig, e.what());
  }
}

#define PF_REAL(NAME, EXPR)                                                    \
  Key {                                                                        \
    NAME, [](const RunConfig& c) { return io::format_double(c.EXPR); },        \
        [](RunConfig& c, std::string_view v) { c.EXPR = to_double(NAME, v); } \
  }
#define PF_COUNT(NAME, EXPR)                                                  \
  Key {                                                                       \
    NAME, [](const RunConfig& c) { return std::to_string(c.EXPR); },          \
        [](RunConfig& c, std::string_view v) {                                \
          c.EXPR = static_cast<decltype(c.EXPR)>(to_u64(NAME, v));            \
        }                                                                     \
  }

const std::vector<Key>& key_table() {
  static const std::vector<Key> table = {
      PF_COUNT("seed", seed),
      Key{"output_dir", [](const RunConfig& c) { return c.output_dir.string(); },
          [](RunConfig& c, std::string_view v) {
            if (v.empty()) throw Error(ErrorKind::kConfig, "config key 'output_dir' is empty");
            c.output_dir = std::string(v);
          }},
      PF_COUNT("world.n_landmarks", n_landmarks),
      PF_COUNT("world.signature_dim", signature_dim),
      PF_REAL("world.size", world_size),
      PF_COUNT("paths.count", n_paths),
      PF_REAL("path.length", path.length),
      PF_REAL("path.waypoint_spacing", path.waypoint_spacing),
      PF_REAL("path.sac_budget", path.sac_budget),
      PF_REAL("path.edge_clearance", path.edge_clearance),
      PF_REAL("path.min_separation", path.min_separation),
      PF_COUNT("path.max_attempts", path.max_attempts),
      PF_COUNT("render.bins", augmentation.render.bins),
      PF_REAL("render.fov", augmentation.render.fov),
      PF_COUNT("aug.n_augmented", augmentation.n_augmented),
      PF_REAL("aug.pos_jitter", augmentation.pos_jitter),
      PF_REAL("aug.yaw_jitter", augmentation.yaw_jitter),
      PF_REAL("aug.step", augmentation.step),
      PF_REAL("aug.capture_radius", augmentation.capture_radius),
      PF_REAL("train.lr0", train.lr0),
      PF_COUNT("train.batch_size", train.batch_size),
      PF_COUNT("train.epochs", train.epochs),
      PF_COUNT("train.lr_halving_period", train.lr_halving_period),
      PF_COUNT("train.projection_dim", train.projection_dim),
      PF_COUNT("train.hidden_units", train.hidden_units),
      PF_COUNT("rollout.max_steps", rollout.max_steps),
      PF_REAL("rollout.bounds_margin", rollout.bounds_margin),
      PF_COUNT("eval.test_sweeps", test_sweeps),
      Key{"ablation.levels",
          [](const RunConfig& c) {
            std::string out;
            for (std::size_t i = 0; i < c.ablation_levels.size(); ++i) {
              if (i) out += ",";
              out += std::to_string(c.ablation_levels[i]);
            }
            return out;
          },
          [](RunConfig& c, std::string_view v) {
            c.ablation_levels.clear();
            for (auto f : io::split_csv(v)) {
              c.ablation_levels.push_back(
                  static_cast<std::size_t>(to_u64("ablation.levels", trim(f))));
            }
          }},
  };
  return table;
}

#undef PF_REAL
#undef PF_COUNT

const Key* find_key(std::string_view name) {
  for (const auto& k : key_table()) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

}  // namespace

Rect RunConfig::world_bounds() const {
  const double h = world_size / 2.0;
  return {{-h, -h}, {h, h}};
}

void RunConfig::sync() {
  path.bounds = world_bounds();
  augmentation.seed = seed;
  rollout.step = augmentation.step;
  rollout.capture_radius = augmentation.capture_radius;
  rollout.render = augmentation.render;
}

void RunConfig::validate() const {
  auto fail = [](std::string_view key, const std::string& msg) {
    throw Error(ErrorKind::kConfig, key_where(key) + ": " + msg);
  };
  if (!(world_size > 0.0)) fail("world.size", "must be > 0");
  if (n_landmarks < 1) fail("world.n_landmarks", "must be >= 1");
  if (signature_dim < 1) fail("world.signature_dim", "must be >= 1");
  if (n_paths < 1) fail("paths.count", "must be >= 1");
  if (!(path.length > 0.0)) fail("path.length", "must be > 0");
  if (!(path.waypoint_spacing > 0.0)) fail("path.waypoint_spacing", "must be > 0");
  if (!(path.sac_budget >= 0.0)) fail("path.sac_budget", "must be >= 0");
  if (!(path.edge_clearance >= 0.0) || 2.0 * path.edge_clearance >= world_size) {
    fail("path.edge_clearance", "must be >= 0 and leave room inside the world");
  }
  if (augmentation.render.bins < 1) fail("render.bins", "must be >= 1");
  if (!(augmentation.render.fov > 0.0) || augmentation.render.fov > kTwoPi) {
    fail("render.fov", "must lie in (0, 2*pi]");
  }
  if (augmentation.n_augmented < 1) fail("aug.n_augmented", "must be >= 1");
  try {
    augmentation.validate();
  } catch (const Error& e) {
    fail("aug.*", e.what());
  }
  try {
    train.validate();
  } catch (const Error& e) {
    fail("train.*", e.what());
  }
  if (!(rollout.bounds_margin >= 0.0)) fail("rollout.bounds_margin", "must be >= 0");
  if (test_sweeps < 1) fail("eval.test_sweeps", "must be >= 1");
  if (ablation_levels.empty()) fail("ablation.levels", "must list at least one level");
  for (auto k : ablation_levels) {
    if (k < 1) fail("ablation.levels", "levels must be >= 1");
  }
}

void set_config_value(RunConfig& config, std::string_view key, std::string_view value) {
  const Key* k = find_key(trim(key));
  if (!k) throw Error(ErrorKind::kConfig, "unknown config key '" + std::string(key) + "'");
  k->set(config, trim(value));
  config.sync();
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "config line " + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kConfig, where + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (!find_key(key)) {
      throw Error(ErrorKind::kConfig, where + ": unknown key '" + std::string(key) + "'");
    }
    if (!seen.emplace(key).second) {
      throw Error(ErrorKind::kConfig, where + ": duplicate key '" + std::string(key) + "'");
    }
    set_config_value(config, key, line.substr(eq + 1));
  }
  config.sync();
  config.validate();
  return config;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::string text;
  try {
    text = io::read_text_file(file);
  } catch (const Error& e) {
    throw Error(ErrorKind::kConfig, e.what());
  }
  return parse_config(text);
}

std::string resolved_config(const RunConfig& config) {
  std::string out;
  for (const auto& k : key_table()) {
    out += std::string(k.name) + " = " + k.get(config) + "\n";
  }
  return out;
}

std::vector<std::string_view> config_keys() {
  std::vector<std::string_view> out;
  for (const auto& k : key_table()) out.push_back(k.name);
  return out;
}

}  // namespace pathfollow
