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

#include "vforest/scene.h"

#include <cmath>
#include <numeric>

#include "vforest/error.h"

namespace vforest {

namespace {

bool InUnitInterval(const Rgb& c) {
  for (int i = 0; i < 3; ++i) {
    if (!(c[i] >= 0.0 && c[i] <= 1.0)) return false;
  }
  return true;
}

}  // namespace

void SpeciesSpec::Validate() const {
  if (!(trunk_base_radius_m > 0.0)) throw Error("species " + name + ": trunk_base_radius_m must be > 0");
  if (!(trunk_taper_exponent >= 0.0)) throw Error("species " + name + ": trunk_taper_exponent must be >= 0");
  if (!(height_min_m > 0.0 && height_min_m <= height_max_m)) {
    throw Error("species " + name + ": height range must satisfy 0 < min <= max");
  }
  if (branch_count_min < 0 || branch_count_min > branch_count_max) {
    throw Error("species " + name + ": branch count range must satisfy 0 <= min <= max");
  }
  if (!(branch_radius_fraction > 0.0 && branch_radius_fraction < 1.0)) {
    throw Error("species " + name + ": branch_radius_fraction must be in (0,1)");
  }
  if (!(crown_radii_m.x > 0.0 && crown_radii_m.y > 0.0 && crown_radii_m.z > 0.0)) {
    throw Error("species " + name + ": crown radii must be > 0");
  }
  if (!InUnitInterval(bark_albedo) || !InUnitInterval(leaf_albedo)) {
    throw Error("species " + name + ": albedo components must be in [0,1]");
  }
}

Terrain::Terrain(int cols, int rows, double cell_size_m, std::vector<double> elevations_m)
    : cols_(cols), rows_(rows), cell_size_m_(cell_size_m), elevations_m_(std::move(elevations_m)) {
  if (cols_ < 2 || rows_ < 2) throw Error("terrain grid needs at least 2x2 nodes");
  if (!(cell_size_m_ > 0.0) || !std::isfinite(cell_size_m_)) throw Error("terrain cell size must be positive");
  if (elevations_m_.size() != static_cast<std::size_t>(cols_) * rows_) {
    throw Error("terrain elevation count does not match grid size");
  }
  for (const double e : elevations_m_) {
    if (!std::isfinite(e)) throw Error("terrain elevations must be finite");
  }
}

Terrain Terrain::Flat(double extent_m, double cell_size_m, double height_m) {
  if (!(extent_m > 0.0) || !(cell_size_m > 0.0)) throw Error("flat terrain needs positive extent and cell size");
  const int n = static_cast<int>(std::ceil(extent_m / cell_size_m)) + 1;
  return Terrain(n, n, cell_size_m, std::vector<double>(static_cast<std::size_t>(n) * n, height_m));
}

Lighting LightingPreset(const std::string& name) {
  Lighting l;
  if (name == "noon") {
    l.sun_direction = Normalized(Vec3{0.25, 0.15, 0.95});
    l.sun_intensity = 1.0;
    l.sun_color = {1.0, 0.98, 0.94};
    l.ambient_intensity = 0.30;
  } else if (name == "sunset") {
    l.sun_direction = Normalized(Vec3{-0.95, 0.20, 0.12});
    l.sun_intensity = 0.85;
    l.sun_color = {1.0, 0.62, 0.36};
    l.ambient_intensity = 0.18;
  } else {
    throw Error("unknown lighting preset '" + name + "' (expected noon or sunset)");
  }
  return l;
}

void SceneConfig::Validate() const {
  const TerrainParams& t = terrain;
  if (!(std::isfinite(t.extent_m) && t.extent_m > 0.0)) throw ConfigError("/terrain/extent_m", "must be > 0");
  if (!(std::isfinite(t.cell_size_m) && t.cell_size_m > 0.0)) throw ConfigError("/terrain/cell_size_m", "must be > 0");
  if (!(std::isfinite(t.amplitude_m) && t.amplitude_m >= 0.0)) throw ConfigError("/terrain/amplitude_m", "must be >= 0");
  if (t.octaves < 1) throw ConfigError("/terrain/octaves", "must be >= 1");
  if (!(std::isfinite(t.base_frequency) && t.base_frequency >= 0.0)) {
    throw ConfigError("/terrain/base_frequency", "must be >= 0");
  }
  if (!(std::isfinite(tree_density_per_ha) && tree_density_per_ha >= 0.0)) {
    throw ConfigError("/trees/density_per_ha", "must be >= 0");
  }
  if (!(std::isfinite(min_spacing_m) && min_spacing_m > 0.0)) throw ConfigError("/trees/min_spacing_m", "must be > 0");
  double sum = 0.0;
  for (const double w : species_weights) {
    if (!(std::isfinite(w) && w >= 0.0)) throw ConfigError("/trees/species_weights", "weights must be >= 0");
    sum += w;
  }
  if (tree_density_per_ha > 0.0 && !(sum > 0.0)) {
    throw ConfigError("/trees/species_weights", "weights must not all be zero when density > 0");
  }
  if (radial_segments < 3) throw ConfigError("/trees/radial_segments", "must be >= 3");
  if (std::abs(Norm(lighting.sun_direction) - 1.0) > 1e-6) {
    throw ConfigError("/lighting/sun_direction", "must be a unit vector");
  }
  if (!(lighting.sun_intensity >= 0.0) || !(lighting.ambient_intensity >= 0.0)) {
    throw ConfigError("/lighting", "intensities must be >= 0");
  }
  if (!(std::isfinite(fog_density) && fog_density >= 0.0)) throw ConfigError("/weather/fog_density", "must be >= 0");
  if (!InUnitInterval(sky_color)) throw ConfigError("/weather/sky_color", "components must be in [0,1]");
  if (!InUnitInterval(terrain_albedo)) throw ConfigError("/terrain/albedo", "components must be in [0,1]");
}

CameraIntrinsics CameraIntrinsics::FromHorizontalFov(int width_px, int height_px, double hfov_deg) {
  if (width_px <= 0 || height_px <= 0) throw Error("image dimensions must be positive");
  if (!(hfov_deg > 0.0 && hfov_deg < 180.0)) throw Error("horizontal FOV must be in (0, 180) degrees");
  CameraIntrinsics k;
  k.width_px = width_px;
  k.height_px = height_px;
  k.fx = 0.5 * width_px / std::tan(0.5 * hfov_deg * kPi / 180.0);
  k.fy = k.fx;
  k.cx = 0.5 * width_px;
  k.cy = 0.5 * height_px;
  return k;
}

void CameraIntrinsics::Validate() const {
  if (width_px <= 0 || height_px <= 0) throw Error("image dimensions must be positive");
  if (!(fx > 0.0 && fy > 0.0)) throw Error("focal lengths must be positive");
  if (!(cx >= 0.0 && cx < width_px && cy >= 0.0 && cy < height_px)) {
    throw Error("principal point must lie inside the image");
  }
}

Pose Pose::LookingAlong(const Vec3& position, double yaw_rad, double pitch_rad) {
  const Vec3 forward{std::cos(pitch_rad) * std::cos(yaw_rad), std::cos(pitch_rad) * std::sin(yaw_rad),
                     std::sin(pitch_rad)};
  const Vec3 right = Normalized(Cross(forward, Vec3{0.0, 0.0, 1.0}));
  const Vec3 down = Cross(forward, right);
  return Pose{position, Quaternion::FromBasis(right, down, forward)};
}

std::array<double, 16> Pose::ToMatrix() const {
  const auto r = orientation.ToMatrix();
  return {r[0], r[1], r[2], position_m.x, r[3], r[4], r[5], position_m.y,
          r[6], r[7], r[8], position_m.z, 0.0,  0.0,  0.0,  1.0};
}

void Pose::Validate() const {
  if (!IsFinite(position_m)) throw Error("pose position must be finite");
  if (std::abs(orientation.Norm() - 1.0) > 1e-9) throw Error("pose orientation must be a unit quaternion");
}

const char* PartLabelName(PartLabel label) {
  switch (label) {
    case PartLabel::kTrunk: return "trunk";
    case PartLabel::kBranch: return "branch";
    case PartLabel::kLeaf: return "leaf";
  }
  return "unknown";
}

}  // namespace vforest
