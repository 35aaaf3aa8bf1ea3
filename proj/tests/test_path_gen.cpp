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

#include <gtest/gtest.h>

#include <cmath>

#include "pathfollow/error.hpp"
#include "pathfollow/path_gen.hpp"

using namespace pathfollow;

namespace {

std::vector<Point2> pts(const Path& p) { return {p.waypoints().begin(), p.waypoints().end()}; }

}  // namespace

TEST(GeneratePath, ZeroBudgetIsStraight) {
  PathGenConfig c;
  c.sac_budget = 0.0;
  const Path p = generate_path(3, "s", c);
  EXPECT_EQ(p.size(), 31u);
  EXPECT_NEAR(sum_angle_change(p), 0.0, 1e-9);
  EXPECT_NEAR(path_length(p), 150.0, 1e-9);
}

TEST(GeneratePath, LengthSpacingAndBudget) {
  const PathGenConfig c;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Path p = generate_path(seed, "g", c);
    ASSERT_EQ(p.size(), 31u);
    EXPECT_NEAR(path_length(p), 150.0, 1e-9);
    for (std::size_t i = 1; i < p.size(); ++i) {
      ASSERT_NEAR(distance(p[i - 1], p[i]), 5.0, 1e-9);
    }
    EXPECT_NEAR(sum_angle_change(p), 5.0, 0.15 * 5.0);
    for (const auto& w : p.waypoints()) {
      ASSERT_GE(w.x, -90.0);
      ASSERT_LE(w.x, 90.0);
      ASSERT_GE(w.y, -90.0);
      ASSERT_LE(w.y, 90.0);
    }
  }
}

TEST(GeneratePath, DeterministicPerSeedAndId) {
  const PathGenConfig c;
  EXPECT_EQ(pts(generate_path(4, "a", c)), pts(generate_path(4, "a", c)));
  EXPECT_NE(pts(generate_path(4, "a", c)), pts(generate_path(5, "a", c)));
  EXPECT_NE(pts(generate_path(4, "a", c)), pts(generate_path(4, "b", c)));
}

TEST(GeneratePath, RoundsSegmentCount) {
  PathGenConfig c;
  c.length = 12.0;
  c.waypoint_spacing = 5.0;
  c.sac_budget = 0.5;
  const Path p = generate_path(1, "r", c);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_NEAR(distance(p[0], p[1]), 6.0, 1e-12);
}

TEST(GeneratePath, RejectsImpossibleRequests) {
  PathGenConfig c;
  c.length = -1;
  EXPECT_THROW(generate_path(1, "x", c), Error);
  c = PathGenConfig{};
  c.length = 5;
  c.sac_budget = 1;  // one segment, no turns
  EXPECT_THROW(generate_path(1, "x", c), Error);
  c = PathGenConfig{};
  c.sac_budget = 100;
  EXPECT_THROW(generate_path(1, "x", c), Error);
  c = PathGenConfig{};
  c.length = 500;  // cannot fit in a 180 m box
  c.sac_budget = 0;
  try {
    generate_path(1, "x", c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kStage);
  }
}
