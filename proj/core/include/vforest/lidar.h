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

#ifndef VFOREST_LIDAR_H_
#define VFOREST_LIDAR_H_

#include <cstdint>
#include <vector>

#include "vforest/bvh.h"
#include "vforest/scene.h"

namespace vforest {

struct LidarParams {
  int rings = 16;
  int azimuth_steps = 360;
  double vfov_lo_deg = -15.0;
  double vfov_hi_deg = 15.0;
  double max_range_m = 100.0;

  void Validate() const;
};

struct LidarPoint {
  Vec3 position_m;  // world frame
  std::uint16_t instance_id = 0;
  std::uint8_t ring = 0;
  float azimuth_rad = 0.0f;
  double range_m = 0.0;
  std::uint32_t triangle = 0;  // hit primitive; not serialized
};

struct LidarScan {
  std::vector<LidarPoint> points;
  Pose sensor_pose;
  double timestamp_s = 0.0;
};

// Direction of (ring, azimuth step) in the sensor frame, which coincides
// with the camera frame (x right, y down, z forward). Elevation is measured
// from the x-z plane toward -y; azimuth 0 looks along +z and grows toward +x.
// Rings span [vfov_lo, vfov_hi] inclusive; azimuths cover a full turn.
Vec3 LidarBeamDirection(const LidarParams& params, int ring, int step);

// One return per beam that hits anything within max_range. Returns carry
// the tree id of any part (trunk, branch or leaf), 0 for terrain.
LidarScan SimulateLidar(const Bvh& bvh, const Pose& pose, const LidarParams& params);

}  // namespace vforest

#endif  // VFOREST_LIDAR_H_
