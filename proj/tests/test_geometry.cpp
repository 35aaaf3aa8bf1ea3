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
#include <random>

#include "pathfollow/error.hpp"
#include "pathfollow/geometry.hpp"

using namespace pathfollow;

TEST(WrapAngle, Examples) {
  EXPECT_EQ(wrap_angle(0.3).radians(), 0.3);
  EXPECT_DOUBLE_EQ(wrap_angle(3 * kPi / 2).radians(), -kPi / 2);
  EXPECT_DOUBLE_EQ(wrap_angle(-kPi).radians(), kPi);
  EXPECT_DOUBLE_EQ(wrap_angle(kPi).radians(), kPi);
  EXPECT_DOUBLE_EQ(wrap_angle(0.0).radians(), 0.0);
  EXPECT_NEAR(wrap_angle(7 * kPi).radians(), kPi, 1e-12);
}

TEST(WrapAngle, RangeIdempotenceAndPeriodicity) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> d(-1e3, 1e3);
  for (int i = 0; i < 10000; ++i) {
    const double x = d(gen);
    const double w = wrap_angle(x).radians();
    ASSERT_GT(w, -kPi);
    ASSERT_LE(w, kPi);
    ASSERT_EQ(wrap_angle(w).radians(), w);
    // Same direction as the input.
    ASSERT_NEAR(std::cos(w), std::cos(x), 1e-9);
    ASSERT_NEAR(std::sin(w), std::sin(x), 1e-9);
  }
}

TEST(WrapAngle, RejectsNonFinite) {
  EXPECT_THROW(wrap_angle(std::nan("")), Error);
  EXPECT_THROW(wrap_angle(INFINITY), Error);
}

TEST(AngleArithmetic, Wraps) {
  const Angle a = Angle::wrap(3.0), b = Angle::wrap(1.0);
  EXPECT_NEAR((a + b).radians(), 4.0 - kTwoPi, 1e-12);
  EXPECT_NEAR((b - a).radians(), -2.0, 1e-12);
}

TEST(TargetYawDelta, Examples) {
  EXPECT_EQ(target_yaw_delta({{0, 0}, Angle::wrap(0)}, {1, 0}).radians(), 0.0);
  EXPECT_NEAR(target_yaw_delta({{0, 0}, Angle::wrap(0)}, {0, 1}).radians(), kPi / 2, 1e-12);
  // atan2(5 - 3, 2 - 2) - pi/4.
  EXPECT_NEAR(target_yaw_delta({{2, 3}, Angle::wrap(kPi / 4)}, {2, 5}).radians(),
              std::atan2(2.0, 0.0) - kPi / 4, 1e-12);
  // Behind: exactly pi, never -pi.
  EXPECT_EQ(target_yaw_delta({{0, 0}, Angle::wrap(0)}, {-1, 0}).radians(), kPi);
  EXPECT_NEAR(target_yaw_delta({{0, 0}, Angle::wrap(kPi / 2)}, {1, 0}).radians(), -kPi / 2,
              1e-12);
}

TEST(TargetYawDelta, DegenerateThrows) {
  EXPECT_THROW(target_yaw_delta({{1, 1}, Angle::wrap(0)}, {1, 1}), Error);
}

TEST(TargetYawDelta, RotatingByDeltaFacesTarget) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> d(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const Pose pose{{d(gen), d(gen)}, Angle::wrap(d(gen))};
    const Point2 t{d(gen), d(gen)};
    const Angle delta = target_yaw_delta(pose, t);
    const Angle facing = pose.yaw + delta;
    ASSERT_NEAR((facing - bearing(pose.position, t)).radians(), 0.0, 1e-9);
  }
}

TEST(Path, Validation) {
  EXPECT_THROW(Path("p", {{0, 0}}), Error);
  EXPECT_THROW(Path("p", {}), Error);
  EXPECT_THROW(Path("p", {{0, 0}, {0, 0}}), Error);
  EXPECT_THROW(Path("p", {{0, 0}, {NAN, 1}}), Error);
  try {
    Path("one", {{0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("length >= 2"), std::string::npos);
  }
  const Path ok("p", {{0, 0}, {1, 0}, {0, 0}});
  EXPECT_EQ(ok.size(), 3u);
}

TEST(PathLength, Examples) {
  EXPECT_DOUBLE_EQ(path_length(Path("p", {{0, 0}, {3, 4}})), 5.0);
  EXPECT_DOUBLE_EQ(path_length(Path("p", {{0, 0}, {3, 4}, {3, 10}})), 11.0);
}

TEST(PathLength, MatchesIndependentSum) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> d(-100, 100);
  std::vector<Point2> w(50);
  for (auto& p : w) p = {d(gen), d(gen)};
  long double ref = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const long double dx = w[i + 1].x - w[i].x, dy = w[i + 1].y - w[i].y;
    ref += std::sqrt(dx * dx + dy * dy);
  }
  EXPECT_NEAR(path_length(Path("r", w)), static_cast<double>(ref), 1e-9);
}

TEST(SumAngleChange, Examples) {
  EXPECT_EQ(sum_angle_change(Path("p", {{0, 0}, {1, 0}})), 0.0);
  EXPECT_EQ(sum_angle_change(Path("p", {{0, 0}, {1, 0}, {2, 0}})), 0.0);
  EXPECT_NEAR(sum_angle_change(Path("l", {{0, 0}, {1, 0}, {1, 1}})), kPi / 2, 1e-12);
  EXPECT_NEAR(sum_angle_change(Path("sq", {{0, 0}, {1, 0}, {1, 1}, {0, 1}})), kPi, 1e-12);
  const Path closed("sq", {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  EXPECT_NEAR(sum_angle_change(closed), 3 * kPi / 2, 1e-12);
  const Path step("s", {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  EXPECT_NEAR(sum_angle_change(step), kPi, 1e-12);
  // Zig-zag: signs alternate but magnitudes add.
  const Path zig("z", {{0, 0}, {1, 1}, {2, 0}, {3, 1}});
  EXPECT_NEAR(sum_angle_change(zig), 2 * (kPi / 2), 1e-12);
}

TEST(PointSegmentDistance, Clamped) {
  EXPECT_DOUBLE_EQ(point_segment_distance({1, 0.5}, {0, 0}, {2, 0}), 0.5);
  EXPECT_DOUBLE_EQ(point_segment_distance({-3, 4}, {0, 0}, {2, 0}), 5.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({5, 4}, {0, 0}, {2, 0}), 5.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({3, 4}, {0, 0}, {0, 0}), 5.0);
}

TEST(Rect, ExpandedAndContains) {
  const Rect r{{0, 0}, {10, 20}};
  const Rect e = r.expanded(0.1);
  EXPECT_EQ(e.min.x, -1.0);
  EXPECT_EQ(e.max.y, 22.0);
  EXPECT_TRUE(r.contains({0, 0}));
  EXPECT_FALSE(r.contains({10.0001, 5}));
  EXPECT_TRUE((Rect{{0, 0}, {0, 1}}).empty());
}
