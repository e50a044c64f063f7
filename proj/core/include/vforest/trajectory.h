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

#ifndef VFOREST_TRAJECTORY_H_
#define VFOREST_TRAJECTORY_H_

#include <algorithm>
#include <vector>

#include "vforest/scene.h"

namespace vforest {

struct Keyframe {
  double timestamp_s = 0.0;
  Pose pose;
};

struct Trajectory {
  std::vector<Keyframe> keyframes;  // strictly increasing timestamps, >= 2
  double frame_rate_hz = 10.0;

  void Validate() const;
  double start_s() const { return keyframes.front().timestamp_s; }
  double end_s() const { return keyframes.back().timestamp_s; }
  // Frames at t0 + k / rate for every k with t <= t_end (inclusive).
  int FrameCount() const;
  // Clamped to end_s() so the last frame is always interpolable.
  double FrameTime(int k) const;
};

// Linear position and slerped orientation between the bracketing
// keyframes. Throws when t is outside [first, last].
Pose InterpolatePose(const Trajectory& trajectory, double t);

}  // namespace vforest

#endif  // VFOREST_TRAJECTORY_H_
