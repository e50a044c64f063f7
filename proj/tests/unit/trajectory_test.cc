/*
 * Copyright 2026 The VForest Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vforest/trajectory.h"

#include <cmath>

#include "gtest/gtest.h"
#include "vforest/error.h"

namespace vforest {
namespace {

double YawOf(const Pose& p) {
  const Vec3 f = p.orientation.Rotate({0, 0, 1});
  return std::atan2(f.y, f.x);
}

Trajectory TwoKeyframes(const Pose& a, const Pose& b, double t1) {
  Trajectory t;
  t.keyframes = {{0.0, a}, {t1, b}};
  t.frame_rate_hz = 10.0;
  return t;
}

TEST(TrajectoryTest, KeyframeTimesReturnKeyframePoses) {
  const Pose a = Pose::LookingAlong({1, 2, 3}, 0.3, 0.1);
  const Pose b = Pose::LookingAlong({4, 5, 6}, 1.1, -0.2);
  const Pose c = Pose::LookingAlong({7, 1, 2}, 2.0, 0.0);
  Trajectory t;
  t.keyframes = {{0.0, a}, {1.0, b}, {2.5, c}};
  for (const Keyframe& k : t.keyframes) {
    const Pose p = InterpolatePose(t, k.timestamp_s);
    EXPECT_EQ(p.position_m.x, k.pose.position_m.x);
    EXPECT_EQ(p.position_m.y, k.pose.position_m.y);
    EXPECT_EQ(p.position_m.z, k.pose.position_m.z);
    EXPECT_EQ(p.orientation.w, k.pose.orientation.w);
    EXPECT_EQ(p.orientation.z, k.pose.orientation.z);
  }
}

TEST(TrajectoryTest, MidpointOfPureTranslation) {
  const Pose a = Pose::LookingAlong({0, 0, 1}, 0.5, 0.0);
  const Pose b = Pose::LookingAlong({4, -2, 3}, 0.5, 0.0);
  const Pose m = InterpolatePose(TwoKeyframes(a, b, 2.0), 1.0);
  EXPECT_NEAR(m.position_m.x, 2.0, 1e-12);
  EXPECT_NEAR(m.position_m.y, -1.0, 1e-12);
  EXPECT_NEAR(m.position_m.z, 2.0, 1e-12);
  EXPECT_NEAR(AngularDistance(m.orientation, a.orientation), 0.0, 1e-12);
}

TEST(TrajectoryTest, SlerpHalvesNinetyDegreeYaw) {
  const Pose a = Pose::LookingAlong({0, 0, 0}, 0.0, 0.0);
  const Pose b = Pose::LookingAlong({0, 0, 0}, kPi / 2, 0.0);
  const Pose m = InterpolatePose(TwoKeyframes(a, b, 1.0), 0.5);
  EXPECT_NEAR(YawOf(m), kPi / 4, 1e-6);
  EXPECT_NEAR(AngularDistance(m.orientation, a.orientation), kPi / 4, 1e-9);
}

TEST(TrajectoryTest, OutOfRangeTimeThrows) {
  const Pose a = Pose::LookingAlong({0, 0, 0}, 0.0, 0.0);
  const Trajectory t = TwoKeyframes(a, a, 1.0);
  EXPECT_THROW(InterpolatePose(t, -0.01), Error);
  EXPECT_THROW(InterpolatePose(t, 1.01), Error);
}

TEST(TrajectoryTest, FrameCountIncludesEndpoints) {
  const Pose a = Pose::LookingAlong({0, 0, 0}, 0.0, 0.0);
  Trajectory t = TwoKeyframes(a, a, 2.0);
  EXPECT_EQ(t.FrameCount(), 21);
  EXPECT_DOUBLE_EQ(t.FrameTime(20), 2.0);
  t.keyframes = {{0.0, a}, {0.9, a}};
  EXPECT_EQ(t.FrameCount(), 10);
}

TEST(TrajectoryTest, ValidateRejectsBadInput) {
  const Pose a = Pose::LookingAlong({0, 0, 0}, 0.0, 0.0);
  Trajectory t;
  t.keyframes = {{0.0, a}};
  EXPECT_THROW(t.Validate(), Error);
  t.keyframes = {{1.0, a}, {1.0, a}};
  EXPECT_THROW(t.Validate(), Error);
  t.keyframes = {{0.0, a}, {1.0, a}};
  t.frame_rate_hz = 0.0;
  EXPECT_THROW(t.Validate(), Error);
}

}  // namespace
}  // namespace vforest
