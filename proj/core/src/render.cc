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

#include "vforest/render.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "vforest/error.h"
#include "vforest/parallel.h"

namespace vforest {

namespace {

constexpr double kShadowOffsetM = 1e-6;

std::uint8_t Quantize(double c) {
  const double v = std::clamp(c, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::lround(v * 255.0));
}

Vec3 CameraDirection(const CameraIntrinsics& k, int px, int py) {
  return {(px + 0.5 - k.cx) / k.fx, (py + 0.5 - k.cy) / k.fy, 1.0};
}

}  // namespace

Ray CameraRay(const Pose& pose, const CameraIntrinsics& k, int px, int py) {
  const Vec3 d = Normalized(CameraDirection(k, px, py));
  return {pose.position_m, pose.orientation.Rotate(d)};
}

double DepthPerRayUnit(const CameraIntrinsics& k, int px, int py) {
  return 1.0 / Norm(CameraDirection(k, px, py));
}

Rgb ShadeHit(const Bvh& bvh, const SceneConfig& scene, const Ray& ray, const Hit& hit) {
  const SurfaceInfo& surf = bvh.info(hit.triangle);
  Vec3 n = bvh.Normal(hit.triangle);
  if (Dot(n, ray.direction) > 0.0) n = -n;
  const Vec3 p = ray.origin + ray.direction * hit.t;
  const Lighting& light = scene.lighting;

  Rgb c = surf.albedo * light.ambient_intensity;

  const double n_dot_l = Dot(n, light.sun_direction);
  if (n_dot_l > 0.0 && light.sun_intensity > 0.0) {
    const Ray shadow{p + n * kShadowOffsetM, light.sun_direction};
    if (!bvh.Occluded(shadow, std::numeric_limits<double>::infinity())) {
      c += Hadamard(light.sun_color, surf.albedo) * (n_dot_l * light.sun_intensity);
    }
  }

  for (const PointLight& pl : light.point_lights) {
    const Vec3 to_light = pl.position_m - p;
    const double d2 = Dot(to_light, to_light);
    if (!(d2 > 0.0)) continue;
    const double cos_term = Dot(n, to_light) / std::sqrt(d2);
    if (cos_term <= 0.0) continue;
    c += Hadamard(pl.color, surf.albedo) * (pl.intensity * cos_term / d2);
  }

  if (scene.fog_density > 0.0) {
    const double f = std::exp(-scene.fog_density * hit.t);
    c = c * f + scene.sky_color * (1.0 - f);
  }
  return c;
}

FrameBundle RenderFrame(const Bvh& bvh, const SceneConfig& scene, const Pose& pose,
                        const CameraIntrinsics& intrinsics, int threads) {
  intrinsics.Validate();
  pose.Validate();
  const int w = intrinsics.width_px;
  const int h = intrinsics.height_px;
  FrameBundle f;
  f.pose = pose;
  f.intrinsics = intrinsics;
  f.rgb = Rgb8Image(w, h, 3);
  f.depth_m = DepthImage(w, h, 1, 0.0f);
  f.instance = Gray16Image(w, h, 1, 0);
  f.semantic = GrayImage(w, h, 1, 0);
  const std::uint8_t sky[3] = {Quantize(scene.sky_color.x), Quantize(scene.sky_color.y),
                               Quantize(scene.sky_color.z)};

  ParallelFor(h, threads, [&](int y) {
    for (int x = 0; x < w; ++x) {
      const Ray ray = CameraRay(pose, intrinsics, x, y);
      const std::optional<Hit> hit = bvh.Intersect(ray);
      if (!hit) {
        for (int c = 0; c < 3; ++c) f.rgb.at(x, y, c) = sky[c];
        continue;
      }
      const SurfaceInfo& surf = bvh.info(hit->triangle);
      const double z = hit->t * DepthPerRayUnit(intrinsics, x, y);
      // A hit must stay distinguishable from the no-hit code 0.
      f.depth_m.at(x, y) = std::max(static_cast<float>(z), std::numeric_limits<float>::min());
      f.semantic.at(x, y) = static_cast<std::uint8_t>(surf.surface);
      f.instance.at(x, y) = surf.surface == SurfaceClass::kTrunk ? surf.instance_id : 0;
      const Rgb c = ShadeHit(bvh, scene, ray, *hit);
      f.rgb.at(x, y, 0) = Quantize(c.x);
      f.rgb.at(x, y, 1) = Quantize(c.y);
      f.rgb.at(x, y, 2) = Quantize(c.z);
    }
  });
  return f;
}

void CheckFrameInvariants(const FrameBundle& f) {
  const int w = f.rgb.width;
  const int h = f.rgb.height;
  if (f.rgb.channels != 3 || !f.depth_m.SameShape(w, h) || !f.instance.SameShape(w, h) ||
      !f.semantic.SameShape(w, h)) {
    throw Error("frame rasters are not pixel-aligned");
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto sem = f.semantic.at(x, y);
      if (sem > static_cast<std::uint8_t>(SurfaceClass::kLeaf)) {
        throw Error("pixel (" + std::to_string(x) + "," + std::to_string(y) + ") has an unknown semantic code");
      }
      if (f.instance.at(x, y) != 0 && sem != static_cast<std::uint8_t>(SurfaceClass::kTrunk)) {
        throw Error("pixel (" + std::to_string(x) + "," + std::to_string(y) + ") has an instance id off the trunk");
      }
      const bool has_depth = f.depth_m.at(x, y) > 0.0f;
      const bool is_sky = sem == static_cast<std::uint8_t>(SurfaceClass::kSky);
      if (has_depth == is_sky) {
        throw Error("pixel (" + std::to_string(x) + "," + std::to_string(y) + ") breaks depth>0 <=> not sky");
      }
    }
  }
}

}  // namespace vforest
