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

#include "pathfollow/pathfollow.h"

#include <cstring>
#include <new>
#include <string>

#include "pathfollow/config.hpp"
#include "pathfollow/error.hpp"
#include "pathfollow/io.hpp"
#include "pathfollow/pipeline.hpp"

using namespace pathfollow;

struct pf_config {
  RunConfig value;
};
struct pf_world {
  LandmarkWorld value;
};
struct pf_path {
  Path value;
};
struct pf_model {
  RegressorModel value;
};
struct pf_trajectory {
  TrajectoryLog value;
};

namespace {

thread_local std::string g_last_error;

pf_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return PF_ERR_INVALID_ARGUMENT;
    case ErrorKind::kConfig: return PF_ERR_CONFIG;
    case ErrorKind::kIo: return PF_ERR_IO;
    case ErrorKind::kFormat: return PF_ERR_FORMAT;
    case ErrorKind::kDiverged: return PF_ERR_DIVERGED;
    case ErrorKind::kStage: return PF_ERR_STAGE;
  }
  return PF_ERR_INTERNAL;
}

pf_status fail(pf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
pf_status guard(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return PF_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PF_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
}

template <typename T>
void require_out(T** out) {
  require(out != nullptr, "output pointer is NULL");
  *out = nullptr;
}

template <typename Rows>
pf_status finish_runs(const Rows& rows, size_t* n_failed) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& r : rows) {
    if (r.error) {
      if (failed++ == 0) first = r.path_id + ": " + *r.error;
    }
  }
  if (n_failed) *n_failed = failed;
  if (failed > 0) {
    return fail(PF_ERR_STAGE, std::to_string(failed) + " run(s) failed; first: " + first);
  }
  return PF_OK;
}

}  // namespace

extern "C" {

const char* pf_last_error(void) { return g_last_error.c_str(); }

const char* pf_version(void) { return "1.0.0"; }

const char* pf_status_name(pf_status status) {
  switch (status) {
    case PF_OK: return "ok";
    case PF_ERR_CONFIG: return "config error";
    case PF_ERR_STAGE: return "stage failure";
    case PF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PF_ERR_IO: return "i/o error";
    case PF_ERR_FORMAT: return "format error";
    case PF_ERR_DIVERGED: return "diverged";
    case PF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pf_string_free(char* s) { delete[] s; }

// ---- configuration ----

pf_status pf_config_default(pf_config** out) {
  return guard([&] {
    require_out(out);
    auto* c = new pf_config{};
    c->value.sync();
    *out = c;
  });
}

pf_status pf_config_load(const char* file, pf_config** out) {
  return guard([&] {
    require_out(out);
    require(file != nullptr, "config file is NULL");
    *out = new pf_config{load_config(file)};
  });
}

pf_status pf_config_set(pf_config* config, const char* key, const char* value) {
  return guard([&] {
    require(config && key && value, "NULL argument");
    RunConfig next = config->value;
    set_config_value(next, key, value);
    next.validate();
    config->value = std::move(next);
  });
}

pf_status pf_config_resolved(const pf_config* config, char** out) {
  return guard([&] {
    require_out(out);
    require(config != nullptr, "config is NULL");
    const std::string text = resolved_config(config->value);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void pf_config_free(pf_config* config) { delete config; }

// ---- commands ----

pf_status pf_run_gen(const pf_config* config) {
  return guard([&] {
    require(config != nullptr, "config is NULL");
    run_gen(config->value);
  });
}

pf_status pf_run_pipeline(const pf_config* config, size_t* n_failed) {
  std::vector<PathRun> runs;
  const pf_status st = guard([&] {
    require(config != nullptr, "config is NULL");
    runs = run_pipeline(config->value);
  });
  if (st != PF_OK) return st;
  return finish_runs(runs, n_failed);
}

pf_status pf_run_ablation(const pf_config* config, size_t* n_failed) {
  std::vector<AblationRow> rows;
  const pf_status st = guard([&] {
    require(config != nullptr, "config is NULL");
    rows = run_ablation(config->value);
  });
  if (st != PF_OK) return st;
  return finish_runs(rows, n_failed);
}

// ---- world ----

pf_status pf_world_generate(uint64_t seed, size_t n_landmarks, size_t signature_dim,
                            double min_x, double min_y, double max_x, double max_y,
                            pf_world** out) {
  return guard([&] {
    require_out(out);
    *out = new pf_world{
        generate_world(seed, n_landmarks, signature_dim, Rect{{min_x, min_y}, {max_x, max_y}})};
  });
}

pf_status pf_world_from_config(const pf_config* config, pf_world** out) {
  return guard([&] {
    require_out(out);
    require(config != nullptr, "config is NULL");
    *out = new pf_world{make_world(config->value)};
  });
}

pf_status pf_world_load(const char* file, pf_world** out) {
  return guard([&] {
    require_out(out);
    require(file != nullptr, "file is NULL");
    *out = new pf_world{io::load_world(file)};
  });
}

pf_status pf_world_save(const pf_world* world, const char* file) {
  return guard([&] {
    require(world && file, "NULL argument");
    io::save_world(file, world->value);
  });
}

size_t pf_world_landmark_count(const pf_world* world) {
  return world ? world->value.landmarks().size() : 0;
}

pf_status pf_world_render(const pf_world* world, double x, double y, double yaw, size_t bins,
                          double fov, double* out, size_t out_len) {
  return guard([&] {
    require(world && out, "NULL argument");
    const Observation obs =
        render_observation(world->value, Pose{{x, y}, Angle::wrap(yaw)}, RenderConfig{bins, fov});
    require(out_len == obs.features.size(), "out_len must equal bins * signature_dim");
    std::copy(obs.features.begin(), obs.features.end(), out);
  });
}

void pf_world_free(pf_world* world) { delete world; }

// ---- path ----

pf_status pf_path_create(const char* id, const double* xy, size_t n, pf_path** out) {
  return guard([&] {
    require_out(out);
    require(id != nullptr && (xy != nullptr || n == 0), "NULL argument");
    std::vector<Point2> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = {xy[2 * i], xy[2 * i + 1]};
    *out = new pf_path{Path(id, std::move(w))};
  });
}

pf_status pf_path_generate(const pf_config* config, size_t index, pf_path** out) {
  return guard([&] {
    require_out(out);
    require(config != nullptr, "config is NULL");
    RunConfig c = config->value;
    c.sync();
    *out = new pf_path{generate_path(c.seed, path_id(index), c.path)};
  });
}

pf_status pf_path_load(const char* file, pf_path** out) {
  return guard([&] {
    require_out(out);
    require(file != nullptr, "file is NULL");
    *out = new pf_path{io::load_path(file)};
  });
}

pf_status pf_path_save(const pf_path* path, const char* file) {
  return guard([&] {
    require(path && file, "NULL argument");
    io::save_path(file, path->value);
  });
}

size_t pf_path_size(const pf_path* path) { return path ? path->value.size() : 0; }

pf_status pf_path_waypoint(const pf_path* path, size_t i, double* x, double* y) {
  return guard([&] {
    require(path && x && y, "NULL argument");
    require(i < path->value.size(), "waypoint index out of range");
    *x = path->value[i].x;
    *y = path->value[i].y;
  });
}

double pf_path_length(const pf_path* path) { return path ? path_length(path->value) : 0.0; }

double pf_path_sac(const pf_path* path) { return path ? sum_angle_change(path->value) : 0.0; }

void pf_path_free(pf_path* path) { delete path; }

// ---- model ----

pf_status pf_model_train(const pf_world* world, const pf_path* path, const pf_config* config,
                         size_t n_sweeps, pf_model** out) {
  return guard([&] {
    require_out(out);
    require(world && path && config, "NULL argument");
    require(n_sweeps >= 1, "n_sweeps must be >= 1");
    RunConfig c = config->value;
    c.sync();
    c.augmentation.n_augmented = n_sweeps;
    c.train.shuffle_seed = model_shuffle_seed(c, path->value, n_sweeps);
    const Dataset ds = build_dataset(path->value, c.augmentation, world->value);
    *out = new pf_model{
        train(ds, c.train, model_init_seed(c, path->value, n_sweeps)).model};
  });
}

pf_status pf_model_load(const char* file, pf_model** out) {
  return guard([&] {
    require_out(out);
    require(file != nullptr, "file is NULL");
    *out = new pf_model{io::load_model(file)};
  });
}

pf_status pf_model_save(const pf_model* model, const char* file) {
  return guard([&] {
    require(model && file, "NULL argument");
    io::save_model(file, model->value);
  });
}

size_t pf_model_input_dim(const pf_model* model) { return model ? model->value.input_dim() : 0; }

pf_status pf_model_predict(const pf_model* model, const double* features, size_t n,
                           double* yaw_delta) {
  return guard([&] {
    require(model && features && yaw_delta, "NULL argument");
    require(n == model->value.input_dim(), "feature count does not match the model");
    Observation obs;
    obs.features.assign(features, features + n);
    *yaw_delta = predict(model->value, obs).radians();
  });
}

void pf_model_free(pf_model* model) { delete model; }

// ---- rollouts ----

pf_status pf_rollout_model(const pf_world* world, const pf_path* path, const pf_model* model,
                           const pf_config* config, pf_trajectory** out) {
  return guard([&] {
    require_out(out);
    require(world && path && model && config, "NULL argument");
    RunConfig c = config->value;
    c.sync();
    *out = new pf_trajectory{
        rollout(ModelPolicy{&model->value}, world->value, path->value, c.rollout)};
  });
}

pf_status pf_rollout_oracle(const pf_world* world, const pf_path* path, const pf_config* config,
                            pf_trajectory** out) {
  return guard([&] {
    require_out(out);
    require(world && path && config, "NULL argument");
    RunConfig c = config->value;
    c.sync();
    *out = new pf_trajectory{rollout(OraclePolicy{}, world->value, path->value, c.rollout)};
  });
}

size_t pf_trajectory_size(const pf_trajectory* traj) {
  return traj ? traj->value.poses.size() : 0;
}

pf_status pf_trajectory_pose(const pf_trajectory* traj, size_t i, double* x, double* y,
                             double* yaw) {
  return guard([&] {
    require(traj && x && y && yaw, "NULL argument");
    require(i < traj->value.poses.size(), "pose index out of range");
    const Pose& p = traj->value.poses[i];
    *x = p.position.x;
    *y = p.position.y;
    *yaw = p.yaw.radians();
  });
}

pf_termination pf_trajectory_termination(const pf_trajectory* traj) {
  if (!traj) return PF_TERM_MAX_STEPS;
  switch (traj->value.termination) {
    case Termination::kCompleted: return PF_TERM_COMPLETED;
    case Termination::kMaxSteps: return PF_TERM_MAX_STEPS;
    case Termination::kDiverged: return PF_TERM_DIVERGED;
  }
  return PF_TERM_MAX_STEPS;
}

pf_status pf_trajectory_save(const pf_trajectory* traj, const char* file) {
  return guard([&] {
    require(traj && file, "NULL argument");
    io::write_text_file(file, io::trajectory_to_csv(traj->value));
  });
}

void pf_trajectory_free(pf_trajectory* traj) { delete traj; }

// ---- metrics ----

pf_status pf_evaluate(const pf_path* path, const pf_trajectory* traj, pf_metrics* out) {
  return guard([&] {
    require(path && traj && out, "NULL argument");
    const MetricsReport r = evaluate(path->value, traj->value);
    out->mwmd = r.mwmd;
    out->mctd = r.mctd;
    out->sac = r.sac;
    out->termination = pf_trajectory_termination(traj);
    out->steps = r.steps;
  });
}

}  // extern "C"
