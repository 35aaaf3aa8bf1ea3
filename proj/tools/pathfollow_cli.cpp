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

// pathfollow-cli: batch driver over the pathfollow C API.
//
//   pathfollow-cli gen      --config run.cfg
//   pathfollow-cli pipeline --config run.cfg [--set key=value ...]
//   pathfollow-cli ablation --config run.cfg
//   pathfollow-cli config   [--config run.cfg]   (print resolved keys)
//
// Exit codes: 0 success, 1 config error, 2 stage failure.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathfollow/pathfollow.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitStage = 2;

int exit_code(pf_status st) {
  switch (st) {
    case PF_OK: return kExitOk;
    case PF_ERR_CONFIG: return kExitConfig;
    default: return kExitStage;
  }
}

int report(pf_status st, const char* what) {
  if (st != PF_OK) {
    std::fprintf(stderr, "pathfollow-cli: %s: %s: %s\n", what, pf_status_name(st),
                 pf_last_error());
  }
  return exit_code(st);
}

struct Options {
  std::string config_file;
  std::string output_dir;
  std::vector<std::string> overrides;
};

// Loads the config file (or defaults) and applies --out and --set.
pf_status load(const Options& opt, pf_config** out) {
  pf_status st = opt.config_file.empty() ? pf_config_default(out)
                                         : pf_config_load(opt.config_file.c_str(), out);
  if (st != PF_OK) return st;
  if (!opt.output_dir.empty()) {
    st = pf_config_set(*out, "output_dir", opt.output_dir.c_str());
    if (st != PF_OK) return st;
  }
  for (const auto& kv : opt.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "pathfollow-cli: --set expects key=value, got '%s'\n", kv.c_str());
      return PF_ERR_CONFIG;
    }
    st = pf_config_set(*out, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    if (st != PF_OK) return st;
  }
  return PF_OK;
}

void add_common(CLI::App* cmd, Options& opt, bool config_required) {
  auto* c = cmd->add_option("-c,--config", opt.config_file, "key = value config file");
  if (config_required) c->required()->check(CLI::ExistingFile);
  cmd->add_option("-o,--out", opt.output_dir, "override output_dir");
  cmd->add_option("-s,--set", opt.overrides, "override one key (key=value), repeatable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waypoint path following: generate, train, roll out, evaluate."};
  app.require_subcommand(1);
  app.set_version_flag("--version", pf_version());

  Options opt;
  auto* gen = app.add_subcommand("gen", "write world.json and path CSVs");
  auto* pipeline = app.add_subcommand("pipeline", "per-path dataset, model, rollout, metrics, plot");
  auto* ablation = app.add_subcommand("ablation", "held-out MSE and rollout per augmentation level");
  auto* config = app.add_subcommand("config", "print the fully resolved configuration");
  for (auto* cmd : {gen, pipeline, ablation}) add_common(cmd, opt, true);
  add_common(config, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  pf_config* cfg = nullptr;
  pf_status st = load(opt, &cfg);
  if (st != PF_OK) {
    pf_config_free(cfg);
    return report(st, "config");
  }

  const char* what = "";
  std::size_t failed = 0;
  if (gen->parsed()) {
    what = "gen";
    st = pf_run_gen(cfg);
  } else if (pipeline->parsed()) {
    what = "pipeline";
    st = pf_run_pipeline(cfg, &failed);
  } else if (ablation->parsed()) {
    what = "ablation";
    st = pf_run_ablation(cfg, &failed);
  } else {
    what = "config";
    char* text = nullptr;
    st = pf_config_resolved(cfg, &text);
    if (st == PF_OK) std::fputs(text, stdout);
    pf_string_free(text);
  }
  pf_config_free(cfg);
  return report(st, what);
}
