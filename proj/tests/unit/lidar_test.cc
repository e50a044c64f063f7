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

#include "vforest/lidar.h"

#include <cmath>

#include "gtest/gtest.h"
#include "vforest/error.h"
#include "vforest/render.h"

namespace vforest {
namespace {

Bvh Plane(double z, double half) {
  const std::vector<Triangle> tris = {{{-half, -half, z}, {half, -half, z}, {half, half, z}},
                                      {{-half, -half, z}, {half, half, z}, {-half, half, z}}};
  const SurfaceInfo s{0, SurfaceClass::kTerrain, {0.5, 0.5, 0.5}};
  return Bvh(tris, {s, s});
}

TEST(LidarTest, EmptySceneHasNoReturns) {
  const LidarScan scan = SimulateLidar(Bvh(), Pose::LookingAlong({0, 0, 2}, 0, 0), LidarParams{});
  EXPECT_TRUE(scan.points.empty());
}

TEST(LidarTest, BeamDirectionsAreUnitAndSpanFov) {
  LidarParams p;
  p.rings = 5;
  p.azimuth_steps = 8;
  p.vfov_lo_deg = -20;
  p.vfov_hi_deg = 20;
  for (int r = 0; r < p.rings; ++r) {
    for (int s = 0; s < p.azimuth_steps; ++s) {
      const Vec3 d = LidarBeamDirection(p, r, s);
      ASSERT_NEAR(Norm(d), 1.0, 1e-12);
      const double elevation = std::asin(-d.y) * 180.0 / kPi;
      ASSERT_NEAR(elevation, -20.0 + 10.0 * r, 1e-9);
    }
  }
  const Vec3 forward = LidarBeamDirection(p, 2, 0);
  EXPECT_NEAR(forward.z, 1.0, 1e-12);
  const Vec3 quarter = LidarBeamDirection(p, 2, 2);
  EXPECT_NEAR(quarter.x, 1.0, 1e-12);
}

TEST(LidarTest, DownwardRingHitsPlaneBelow) {
  LidarParams p;
  p.rings = 2;
  p.azimuth_steps = 4;
  p.vfov_lo_deg = -90;
  p.vfov_hi_deg = 0;
  const Bvh bvh = Plane(0.0, 20.0);
  const LidarScan scan = SimulateLidar(bvh, Pose::LookingAlong({1.5, -2.0, 10.0}, 0.7, 0.0), p);
  ASSERT_EQ(scan.points.size(), 4u);
  for (const LidarPoint& pt : scan.points) {
    EXPECT_EQ(pt.ring, 0);
    EXPECT_NEAR(pt.range_m, 10.0, 1e-9);
    EXPECT_NEAR(pt.position_m.x, 1.5, 1e-9);
    EXPECT_NEAR(pt.position_m.y, -2.0, 1e-9);
    EXPECT_NEAR(pt.position_m.z, 0.0, 1e-9);
    EXPECT_EQ(pt.instance_id, 0);
  }
}

TEST(LidarTest, MaxRangeDropsFarReturns) {
  LidarParams p;
  p.rings = 2;
  p.azimuth_steps = 4;
  p.vfov_lo_deg = -90;
  p.vfov_hi_deg = 0;
  p.max_range_m = 5.0;
  const LidarScan scan = SimulateLidar(Plane(0.0, 20.0), Pose::LookingAlong({0, 0, 10}, 0, 0), p);
  EXPECT_TRUE(scan.points.empty());
}

TEST(LidarTest, PointsReprojectOntoDepthImage) {
  // Wall at z = 8 in front of an identity-pose sensor.
  const Bvh bvh = Plane(8.0, 30.0);
  const Pose pose{{0, 0, 0}, Quaternion::Identity()};
  const CameraIntrinsics k = CameraIntrinsics::FromHorizontalFov(120, 90, 90);
  const FrameBundle frame = RenderFrame(bvh, SceneConfig{}, pose, k);
  LidarParams p;
  p.rings = 8;
  p.azimuth_steps = 64;
  const LidarScan scan = SimulateLidar(bvh, pose, p);
  int checked = 0;
  for (const LidarPoint& pt : scan.points) {
    const Vec3 c = pose.WorldToCamera(pt.position_m);
    ASSERT_NEAR(c.z, 8.0, 1e-9);
    const double u = k.fx * c.x / c.z + k.cx;
    const double v = k.fy * c.y / c.z + k.cy;
    if (u < 0 || v < 0 || u >= k.width_px || v >= k.height_px) continue;
    EXPECT_NEAR(frame.depth_m.at(static_cast<int>(u), static_cast<int>(v)), c.z, 1e-4);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(LidarTest, ValidateRejectsBadParams) {
  LidarParams p;
  p.rings = 0;
  EXPECT_THROW(p.Validate(), Error);
  p = LidarParams{};
  p.vfov_lo_deg = 20;
  p.vfov_hi_deg = 10;
  EXPECT_THROW(p.Validate(), Error);
  p = LidarParams{};
  p.max_range_m = 0;
  EXPECT_THROW(p.Validate(), Error);
}

}  // namespace
}  // namespace vforest
