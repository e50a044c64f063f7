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

#ifndef VFOREST_RENDER_H_
#define VFOREST_RENDER_H_

#include <cstdint>

#include "vforest/bvh.h"
#include "vforest/raster.h"
#include "vforest/scene.h"

namespace vforest {

// One timestamp of pixel-aligned modalities. All rasters come from the same
// primary ray per pixel:
//   depth_m   z-depth along the camera forward axis, 0 where the ray misses
//   instance  tree id on trunk pixels only, else 0
//   semantic  SurfaceClass code (0 sky, 1 terrain, 2 trunk, 3 branch, 4 leaf)
struct FrameBundle {
  Rgb8Image rgb;
  DepthImage depth_m;
  Gray16Image instance;
  GrayImage semantic;
  double timestamp_s = 0.0;
  Pose pose;
  CameraIntrinsics intrinsics;
};

// World-space ray through the center of pixel (px, py).
Ray CameraRay(const Pose& pose, const CameraIntrinsics& k, int px, int py);

// Ratio between z-depth and ray distance for pixel (px, py).
double DepthPerRayUnit(const CameraIntrinsics& k, int px, int py);

// Direct lighting (Lambert sun with one hard shadow ray, ambient, point
// lights with inverse-square falloff) followed by exponential fog.
// Returns linear RGB before quantization.
Rgb ShadeHit(const Bvh& bvh, const SceneConfig& scene, const Ray& ray, const Hit& hit);

// Renders one frame. Rows are split across `threads` workers; the output
// does not depend on the thread count.
FrameBundle RenderFrame(const Bvh& bvh, const SceneConfig& scene, const Pose& pose,
                        const CameraIntrinsics& intrinsics, int threads = 1);

// Throws vforest::Error describing the first pixel that violates a
// modality alignment rule.
void CheckFrameInvariants(const FrameBundle& frame);

}  // namespace vforest

#endif  // VFOREST_RENDER_H_
