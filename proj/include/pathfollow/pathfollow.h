/*
 * Copyright 2026 The pathfollow Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * pathfollow C API.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function (NULL is accepted). Every fallible call
 * returns a pf_status; on failure pf_last_error() describes the problem for
 * the calling thread until its next API call.
 */
#ifndef PATHFOLLOW_H_
#define PATHFOLLOW_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PATHFOLLOW_BUILDING_LIBRARY)
#    define PF_API __declspec(dllexport)
#  else
#    define PF_API __declspec(dllimport)
#  endif
#else
#  define PF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_CONFIG = 1,           /* bad config file, key or value */
  PF_ERR_STAGE = 2,            /* a pipeline stage failed */
  PF_ERR_INVALID_ARGUMENT = 3, /* NULL handle, bad size, violated precondition */
  PF_ERR_IO = 4,               /* file could not be read or written */
  PF_ERR_FORMAT = 5,           /* malformed input file */
  PF_ERR_DIVERGED = 6,         /* non-finite values during training/inference */
  PF_ERR_INTERNAL = 7
} pf_status;

typedef enum pf_termination {
  PF_TERM_COMPLETED = 0,
  PF_TERM_MAX_STEPS = 1,
  PF_TERM_DIVERGED = 2
} pf_termination;

typedef struct pf_config pf_config;
typedef struct pf_world pf_world;
typedef struct pf_path pf_path;
typedef struct pf_model pf_model;
typedef struct pf_trajectory pf_trajectory;

typedef struct pf_metrics {
  double mwmd;
  double mctd;
  double sac;
  pf_termination termination;
  size_t steps;
} pf_metrics;

PF_API const char* pf_last_error(void);
PF_API const char* pf_version(void);
PF_API const char* pf_status_name(pf_status status);
/* Releases strings returned through char** out-parameters. */
PF_API void pf_string_free(char* s);

/* ---- configuration ---- */
PF_API pf_status pf_config_default(pf_config** out);
PF_API pf_status pf_config_load(const char* file, pf_config** out);
PF_API pf_status pf_config_set(pf_config* config, const char* key, const char* value);
/* Resolved `key = value` text; free with pf_string_free. */
PF_API pf_status pf_config_resolved(const pf_config* config, char** out);
PF_API void pf_config_free(pf_config* config);

/* ---- commands (write under the config's output_dir) ---- */
PF_API pf_status pf_run_gen(const pf_config* config);
/* PF_ERR_STAGE if any path failed; *n_failed (optional) gets the count. */
PF_API pf_status pf_run_pipeline(const pf_config* config, size_t* n_failed);
PF_API pf_status pf_run_ablation(const pf_config* config, size_t* n_failed);

/* ---- world ---- */
PF_API pf_status pf_world_generate(uint64_t seed, size_t n_landmarks, size_t signature_dim,
                                   double min_x, double min_y, double max_x, double max_y,
                                   pf_world** out);
PF_API pf_status pf_world_from_config(const pf_config* config, pf_world** out);
PF_API pf_status pf_world_load(const char* file, pf_world** out);
PF_API pf_status pf_world_save(const pf_world* world, const char* file);
PF_API size_t pf_world_landmark_count(const pf_world* world);
/* Writes bins * signature_dim features; out_len must match exactly. */
PF_API pf_status pf_world_render(const pf_world* world, double x, double y, double yaw,
                                 size_t bins, double fov, double* out, size_t out_len);
PF_API void pf_world_free(pf_world* world);

/* ---- path ---- */
/* xy holds n interleaved (x, y) pairs. */
PF_API pf_status pf_path_create(const char* id, const double* xy, size_t n, pf_path** out);
PF_API pf_status pf_path_generate(const pf_config* config, size_t index, pf_path** out);
PF_API pf_status pf_path_load(const char* file, pf_path** out);
PF_API pf_status pf_path_save(const pf_path* path, const char* file);
PF_API size_t pf_path_size(const pf_path* path);
PF_API pf_status pf_path_waypoint(const pf_path* path, size_t i, double* x, double* y);
PF_API double pf_path_length(const pf_path* path);
PF_API double pf_path_sac(const pf_path* path);
PF_API void pf_path_free(pf_path* path);

/* ---- model ---- */
/* Trains on n_sweeps sweeps (1 optimal + n_sweeps - 1 jittered). */
PF_API pf_status pf_model_train(const pf_world* world, const pf_path* path,
                                const pf_config* config, size_t n_sweeps, pf_model** out);
PF_API pf_status pf_model_load(const char* file, pf_model** out);
PF_API pf_status pf_model_save(const pf_model* model, const char* file);
PF_API size_t pf_model_input_dim(const pf_model* model);
/* Raw (unnormalized) observation in, wrapped yaw delta out. */
PF_API pf_status pf_model_predict(const pf_model* model, const double* features, size_t n,
                                  double* yaw_delta);
PF_API void pf_model_free(pf_model* model);

/* ---- rollouts ---- */
PF_API pf_status pf_rollout_model(const pf_world* world, const pf_path* path,
                                  const pf_model* model, const pf_config* config,
                                  pf_trajectory** out);
PF_API pf_status pf_rollout_oracle(const pf_world* world, const pf_path* path,
                                   const pf_config* config, pf_trajectory** out);
PF_API size_t pf_trajectory_size(const pf_trajectory* traj);
PF_API pf_status pf_trajectory_pose(const pf_trajectory* traj, size_t i, double* x,
                                    double* y, double* yaw);
PF_API pf_termination pf_trajectory_termination(const pf_trajectory* traj);
PF_API pf_status pf_trajectory_save(const pf_trajectory* traj, const char* file);
PF_API void pf_trajectory_free(pf_trajectory* traj);

/* ---- metrics ---- */
PF_API pf_status pf_evaluate(const pf_path* path, const pf_trajectory* traj, pf_metrics* out);

#ifdef __cplusplus
}
#endif

#endif /* PATHFOLLOW_H_ */
