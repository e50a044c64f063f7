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

#include "vforest/error.h"

namespace vforest {

void LidarParams::Validate() const {
  if (rings < 1 || rings > 256) throw Error("lidar rings must be in [1, 256]");
  if (azimuth_steps < 1) throw Error("lidar azimuth_steps must be >= 1");
  if (!(vfov_lo_deg < vfov_hi_deg)) throw Error("lidar vertical FOV needs lo < hi");
  if (!(vfov_lo_deg >= -90.0 && vfov_hi_deg <= 90.0)) throw Error("lidar vertical FOV must lie in [-90, 90]");
  if (!(max_range_m > 0.0)) throw Error("lidar max range must be > 0");
}

Vec3 LidarBeamDirection(const LidarParams& params, int ring, int step) {
  const double el_deg = params.rings == 1
                            ? params.vfov_lo_deg
                            : params.vfov_lo_deg + (params.vfov_hi_deg - params.vfov_lo_deg) * ring / (params.rings - 1);
  const double el = el_deg * kPi / 180.0;
  const double az = 2.0 * kPi * step / params.azimuth_steps;
  return {std::cos(el) * std::sin(az), -std::sin(el), std::cos(el) * std::cos(az)};
}

LidarScan SimulateLidar(const Bvh& bvh, const Pose& pose, const LidarParams& params) {
  params.Validate();
  LidarScan scan;
  scan.sensor_pose = pose;
  for (int ring = 0; ring < params.rings; ++ring) {
    for (int step = 0; step < params.azimuth_steps; ++step) {
      const Vec3 d = pose.orientation.Rotate(LidarBeamDirection(params, ring, step));
      const Ray ray{pose.position_m, Normalized(d)};
      const auto hit = bvh.Intersect(ray, params.max_range_m);
      if (!hit) continue;
      LidarPoint pt;
      pt.position_m = ray.origin + ray.direction * hit->t;
      pt.instance_id = bvh.info(hit->triangle).instance_id;
      pt.ring = static_cast<std::uint8_t>(ring);
      pt.azimuth_rad = static_cast<float>(2.0 * kPi * step / params.azimuth_steps);
      pt.range_m = hit->t;
      pt.triangle = hit->triangle;
      scan.points.push_back(pt);
    }
  }
  return scan;
}

}  // namespace vforest
