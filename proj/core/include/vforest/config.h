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

#ifndef VFOREST_CONFIG_H_
#define VFOREST_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "vforest/geometry.h"
#include "vforest/lidar.h"
#include "vforest/scene.h"

namespace vforest {

struct KeyframeSpec {
  double timestamp_s = 0.0;
  Vec3 position_m;
  Quaternion orientation;
};

struct TrajectorySpec {
  std::string name;
  double frame_rate_hz = 10.0;
  // When true, keyframe z is height above the terrain at the keyframe's (x, y).
  bool altitude_above_terrain = false;
  std::vector<KeyframeSpec> keyframes;
};

struct RunConfig {
  SceneConfig scene;
  std::string lighting_preset;  // empty when lighting was given explicitly
  int width_px = 640;
  int height_px = 480;
  double hfov_deg = 60.0;
  bool lidar_enabled = true;
  LidarParams lidar;
  std::vector<TrajectorySpec> trajectories;
  double test_fraction = 0.06;
  int min_area_px = 16;

  CameraIntrinsics Intrinsics() const { return CameraIntrinsics::FromHorizontalFov(width_px, height_px, hfov_deg); }
};

// Strict parse: unknown keys, wrong types and out-of-range values raise
// vforest::ConfigError whose where() is a field path such as
// "/trajectories/0/keyframes/1/t", or "SOURCE:LINE:COL" for syntax errors.
RunConfig ParseRunConfig(const std::string& json_text, const std::string& source_name = "config");
RunConfig LoadRunConfig(const std::string& path);

// Effective configuration with every default filled in. Stable across runs.
std::string RunConfigToJson(const RunConfig& config, int indent = 2);

// FNV-1a over the compact effective configuration.
std::uint64_t RunConfigHash(const RunConfig& config);
std::string HexU64(std::uint64_t v);

}  // namespace vforest

#endif  // VFOREST_CONFIG_H_
