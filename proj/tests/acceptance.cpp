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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pathfollow/error.hpp"
#include "pathfollow/io.hpp"
#include "pathfollow/learner.hpp"
#include "pathfollow/metrics.hpp"
#include "pathfollow/path_gen.hpp"
#include "pathfollow/pipeline.hpp"
#include "pathfollow/simulator.hpp"

using namespace pathfollow;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

int run_command(const std::string& cmd) {
  const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// ---- criteria 1 and 2 share the default-scenario training runs ----

struct SeedRun {
  std::uint64_t seed = 0;
  double length = 0.0;
  std::vector<LevelResult> levels;  // k = 1, 4, 8, 16
};

const std::vector<std::size_t> kLevels{1, 4, 8, 16};

std::vector<SeedRun> g_runs;
double g_train_seconds = 0.0;

void train_default_scenario() {
  const auto t0 = Clock::now();
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    RunConfig c;
    c.seed = seed;
    c.sync();
    const LandmarkWorld world = make_world(c);
    const Path path = make_paths(c).front();
    const Dataset test = build_test_set(path, c.augmentation, world, c.test_sweeps);
    SeedRun run{seed, path_length(path), {}};
    for (std::size_t k : kLevels) {
      run.levels.push_back(train_and_evaluate(world, path, c, k, &test));
      const auto& r = run.levels.back().report;
      std::printf("  seed %llu k=%2zu: angle_mse %.5f  mctd %.3f  %s\n",
                  static_cast<unsigned long long>(seed), k, *r.angle_mse, r.mctd,
                  std::string(to_string(r.termination)).c_str());
      std::fflush(stdout);
    }
    g_runs.push_back(std::move(run));
  }
  g_train_seconds = seconds_since(t0);
}

Outcome criterion1() {
  std::vector<double> avg(kLevels.size(), 0.0);
  for (const auto& run : g_runs) {
    for (std::size_t i = 0; i < kLevels.size(); ++i) {
      avg[i] += *run.levels[i].report.angle_mse / static_cast<double>(g_runs.size());
    }
  }
  bool ok = avg.back() < avg.front();
  for (std::size_t i = 1; i < avg.size(); ++i) ok = ok && avg[i] <= avg[i - 1] * 1.10;
  ok = ok && g_train_seconds < 600.0;
  std::string d = "mean held-out MSE k=1,4,8,16:";
  for (double v : avg) d += fmt(" %.5f", v);
  d += fmt("; %.1f s", g_train_seconds);
  return {ok, d};
}

Outcome criterion2() {
  std::size_t good = 0;
  std::string d;
  for (const auto& run : g_runs) {
    const auto& k1 = run.levels.front().report;
    const auto& k16 = run.levels.back().report;
    const bool k16_ok =
        k16.termination == Termination::kCompleted && k16.mctd < 0.02 * run.length;
    const bool k1_worse =
        k1.termination != Termination::kCompleted || k1.mctd >= 3.0 * k16.mctd;
    good += (k16_ok && k1_worse) ? 1 : 0;
    d += "seed " + std::to_string(run.seed) + ": k16 " +
         std::string(to_string(k16.termination)) + fmt(" mctd %.2f", k16.mctd) + ", k1 " +
         std::string(to_string(k1.termination)) + fmt(" mctd %.2f", k1.mctd) + "; ";
  }
  d += std::to_string(good) + "/3 seeds satisfy";
  return {good >= 2, d};
}

// ---- 3: oracle bound ----

Outcome criterion3() {
  const auto t0 = Clock::now();
  RunConfig c;
  c.sync();
  const LandmarkWorld world = make_world(c);
  double worst_ct = 0.0, worst_mw = 0.0;
  bool ok = true;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Path p = generate_path(1000 + i, "oracle_" + std::to_string(i), c.path);
    const auto log = rollout(OraclePolicy{}, world, p, c.rollout);
    const auto r = evaluate(p, log);
    worst_ct = std::max(worst_ct, r.mctd);
    worst_mw = std::max(worst_mw, r.mwmd);
    ok = ok && log.termination == Termination::kCompleted && r.mctd < 0.2 && r.mwmd <= 0.4;
  }
  const double t = seconds_since(t0);
  ok = ok && t < 10.0;
  return {ok, fmt("worst MCTD %.4f", worst_ct) + fmt(", worst MWMD %.4f", worst_mw) +
                  fmt(", %.2f s", t)};
}

// ---- 4: metric oracle equivalence ----

double ref_segment(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

Outcome criterion4() {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(-100, 100);
  std::uniform_int_distribution<std::size_t> nw(2, 200), nt(1, 200);
  double worst = 0.0;
  for (int inst = 0; inst < 100; ++inst) {
    std::vector<Point2> w(nw(gen)), t(nt(gen));
    for (auto& q : w) q = {u(gen), u(gen)};
    for (auto& q : t) q = {u(gen), u(gen)};
    const Path path("ref", w);
    double mw = 0.0, ct = 0.0;
    for (const auto& wp : w) {
      double best = INFINITY;
      for (const auto& q : t) best = std::min(best, std::hypot(q.x - wp.x, q.y - wp.y));
      mw += best;
    }
    for (const auto& q : t) {
      std::vector<std::pair<double, std::size_t>> d;
      for (std::size_t i = 0; i < w.size(); ++i) {
        d.emplace_back(std::hypot(q.x - w[i].x, q.y - w[i].y), i);
      }
      std::sort(d.begin(), d.end());
      ct += ref_segment(q, w[d[0].second], w[d[1].second]);
    }
    mw /= static_cast<double>(w.size());
    ct /= static_cast<double>(t.size());
    worst = std::max({worst, std::abs(mean_waypoint_min_distance(path, t) - mw),
                      std::abs(mean_cross_track_distance(path, t) - ct)});
  }
  return {worst <= 1e-12, fmt("max abs difference %.3g over 100 instances", worst)};
}

// ---- 5: gradients ----

Outcome criterion5() {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> nd;
  const double h = 1e-5;
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    auto m = init_model(500 + draw, 10, 8, 12);
    for (double& p : m.head.flat()) p = nd(gen) * 0.5;
    const std::size_t n = 1 + static_cast<std::size_t>(draw) % 8;
    RowMatrix x(static_cast<Eigen::Index>(n), 10);
    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = nd(gen);
    std::vector<double> t(n);
    for (double& v : t) v = nd(gen);
    const auto lg = loss_and_gradient(m, x, t);
    auto flat = m.head.flat();
    for (std::size_t k = 0; k < flat.size(); ++k) {
      const double saved = flat[k];
      flat[k] = saved + h;
      const double up = loss_and_gradient(m, x, t).mse;
      flat[k] = saved - h;
      const double down = loss_and_gradient(m, x, t).mse;
      flat[k] = saved;
      const double fd = (up - down) / (2 * h);
      const double an = lg.grad.flat()[k];
      const double scale = std::max({std::abs(fd), std::abs(an), 1e-6});
      worst = std::max(worst, std::abs(fd - an) / scale);
    }
  }
  return {worst < 1e-4, fmt("max relative error %.3g over 20 draws", worst)};
}

// ---- 6: optimizer ----

Outcome criterion6() {
  std::vector<double> w{0.0};
  AdamState s;
  int steps = 0;
  while (steps < 2000 && std::abs(w[0] - 3.0) >= 1e-2) {
    adam_step(w, std::vector<double>{2.0 * (w[0] - 3.0)}, s, 1e-2);
    ++steps;
  }
  const bool adam_ok = std::abs(w[0] - 3.0) < 1e-2;
  const TrainConfig c;
  const std::vector<double> want{1e-4, 5e-5, 2.5e-5, 1.25e-5};
  bool lr_ok = true;
  for (std::size_t i = 0; i < 4; ++i) lr_ok = lr_ok && lr_at(25 * i, c) == want[i];
  return {adam_ok && lr_ok, "Adam reached |w-3| < 1e-2 in " + std::to_string(steps) +
                                " steps; lr schedule " + (lr_ok ? "exact" : "WRONG")};
}

// ---- 7: determinism through the CLI ----

Outcome criterion7() {
  const fs::path dir = fs::temp_directory_path() / "pathfollow_acceptance_c7";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path cfg = dir / "run.cfg";
  io::write_text_file(cfg,
                      "seed = 7\n"
                      "paths.count = 2\n"
                      "path.length = 30\n"
                      "path.sac_budget = 2\n"
                      "aug.n_augmented = 4\n"
                      "train.epochs = 10\n"
                      "eval.test_sweeps = 2\n"
                      "output_dir = " + (dir / "out").string() + "\n");
  const std::string cli = std::string(PATHFOLLOW_CLI) + " ";
  const std::string args = " --config " + cfg.string();
  if (run_command(cli + "gen" + args) != 0) return {false, "gen failed"};
  const std::vector<std::string> files{"runs/path_00/metrics.json", "runs/path_00/model.json",
                                       "runs/path_01/metrics.json", "runs/path_01/model.json"};
  std::vector<std::string> first;
  for (int pass = 0; pass < 2; ++pass) {
    if (run_command(cli + "pipeline" + args) != 0) return {false, "pipeline failed"};
    for (std::size_t i = 0; i < files.size(); ++i) {
      const std::string text = io::read_text_file(dir / "out" / files[i]);
      if (pass == 0) {
        first.push_back(text);
      } else if (text != first[i]) {
        return {false, files[i] + " differs between runs"};
      }
    }
  }
  fs::remove_all(dir);
  return {true, "metrics.json and model.json byte-identical across 2 pipeline runs"};
}

// ---- 8: property suite ----

Outcome criterion8() {
  const auto t0 = Clock::now();
  const int rc = run_command(PATHFOLLOW_PROPERTIES);
  const double t = seconds_since(t0);
  return {rc == 0 && t < 60.0,
          std::string("property suite ") + (rc == 0 ? "passed" : "FAILED") + fmt(" in %.2f s", t)};
}

}  // namespace

int main() {
  std::printf("training default scenario (3 seeds x k in {1,4,8,16})\n");
  std::fflush(stdout);
  try {
    train_default_scenario();
  } catch (const std::exception& e) {
    std::printf("training failed: %s\n", e.what());
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 augmentation-ablation trend", criterion1},
      {"2 closed-loop recovery", criterion2},
      {"3 oracle-policy bound", criterion3},
      {"4 metric oracle equivalence", criterion4},
      {"5 gradient correctness", criterion5},
      {"6 optimizer sanity", criterion6},
      {"7 determinism", criterion7},
      {"8 property suite", criterion8},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      if ((name[0] == '1' || name[0] == '2') && g_runs.size() != 3) {
        o = {false, "default-scenario training did not finish"};
      } else {
        o = check();
      }
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
