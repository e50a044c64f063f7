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

#ifndef VFOREST_SCENE_H_
#define VFOREST_SCENE_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vforest/geometry.h"

namespace vforest {

inline constexpr int kSpeciesCount = 19;

// Parametric tree species. Lengths in meters.
struct SpeciesSpec {
  std::string name;
  double trunk_base_radius_m = 0.2;
  double trunk_taper_exponent = 1.0;
  double height_min_m = 10.0;
  double height_max_m = 15.0;
  int branch_count_min = 0;
  int branch_count_max = 0;
  double branch_radius_fraction = 0.3;
  Vec3 crown_radii_m{2.0, 2.0, 3.0};
  Rgb bark_albedo{0.3, 0.2, 0.1};
  Rgb leaf_albedo{0.1, 0.4, 0.1};

  // Throws vforest::Error when an invariant does not hold.
  void Validate() const;
};

struct TreeInstance {
  std::uint16_t instance_id = 0;  // >= 1; 0 is background
  int species_index = 0;
  Vec2 position_xy_m;
  double base_elevation_m = 0.0;
  double yaw_rad = 0.0;  // [0, 2pi)
  double scale = 1.0;
  std::uint64_t seed = 0;
};

// Regular heightfield. Node (col, row) is at (col * cell, row * cell).
class Terrain {
 public:
  Terrain(int cols, int rows, double cell_size_m, std::vector<double> elevations_m);

  // Constant-height terrain covering [0, extent] x [0, extent].
  static Terrain Flat(double extent_m, double cell_size_m, double height_m);

  int cols() const { return cols_; }
  int rows() const { return rows_; }
  double cell_size_m() const { return cell_size_m_; }
  double width_m() const { return (cols_ - 1) * cell_size_m_; }
  double depth_m() const { return (rows_ - 1) * cell_size_m_; }
  double At(int col, int row) const { return elevations_m_[static_cast<std::size_t>(row) * cols_ + col]; }
  const std::vector<double>& elevations_m() const { return elevations_m_; }
  bool Contains(double x_m, double y_m) const {
    return x_m >= 0.0 && y_m >= 0.0 && x_m <= width_m() && y_m <= depth_m();
  }

 private:
  int cols_;
  int rows_;
  double cell_size_m_;
  std::vector<double> elevations_m_;
};

struct PointLight {
  Vec3 position_m;
  double intensity = 0.0;  // radiant intensity; irradiance falls off as 1/d^2
  Rgb color{1.0, 1.0, 1.0};
};

struct Lighting {
  Vec3 sun_direction{0.0, 0.0, 1.0};  // unit vector toward the sun
  double sun_intensity = 1.0;
  Rgb sun_color{1.0, 1.0, 1.0};
  double ambient_intensity = 0.25;
  std::vector<PointLight> point_lights;
};

// "noon" and "sunset" presets. Throws vforest::Error for unknown names.
Lighting LightingPreset(const std::string& name);

struct TerrainParams {
  double extent_m = 100.0;
  double cell_size_m = 1.0;
  double amplitude_m = 3.0;
  int octaves = 4;
  double base_frequency = 0.02;
};

struct SceneConfig {
  std::uint64_t master_seed = 42;
  TerrainParams terrain;
  double tree_density_per_ha = 100.0;
  double min_spacing_m = 2.0;
  std::array<double, kSpeciesCount> species_weights;
  int radial_segments = 16;
  Lighting lighting;
  double fog_density = 0.0;
  Rgb sky_color{0.62, 0.74, 0.89};
  Rgb terrain_albedo{0.30, 0.26, 0.17};

  SceneConfig() { species_weights.fill(1.0); }
  void Validate() const;
};

struct CameraIntrinsics {
  int width_px = 640;
  int height_px = 480;
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;

  // Square pixels, principal point at the image center.
  static CameraIntrinsics FromHorizontalFov(int width_px, int height_px, double hfov_deg);
  void Validate() const;
};

// World-from-camera transform. The camera frame is x right, y down,
// z forward; the world frame is z up.
struct Pose {
  Vec3 position_m;
  Quaternion orientation;

  // Camera at `position` looking along (yaw, pitch): yaw about world z from
  // +x, pitch positive upward. Roll is zero.
  static Pose LookingAlong(const Vec3& position, double yaw_rad, double pitch_rad);

  Vec3 CameraToWorld(const Vec3& p_camera) const { return orientation.Rotate(p_camera) + position_m; }
  Vec3 WorldToCamera(const Vec3& p_world) const {
    return orientation.Conjugate().Rotate(p_world - position_m);
  }
  // Row-major 4x4 homogeneous matrix.
  std::array<double, 16> ToMatrix() const;
  void Validate() const;
};

enum class PartLabel : std::uint8_t { kTrunk = 0, kBranch = 1, kLeaf = 2 };

// Semantic raster codes.
enum class SurfaceClass : std::uint8_t { kSky = 0, kTerrain = 1, kTrunk = 2, kBranch = 3, kLeaf = 4 };

inline SurfaceClass ToSurfaceClass(PartLabel label) {
  switch (label) {
    case PartLabel::kTrunk: return SurfaceClass::kTrunk;
    case PartLabel::kBranch: return SurfaceClass::kBranch;
    case PartLabel::kLeaf: return SurfaceClass::kLeaf;
  }
  return SurfaceClass::kSky;
}

const char* PartLabelName(PartLabel label);

}  // namespace vforest

#endif  // VFOREST_SCENE_H_
