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

#include <algorithm>
#include <cmath>

#include "vforest/error.h"

namespace vforest {

void Trajectory::Validate() const {
  if (keyframes.size() < 2) throw Error("trajectory needs at least two keyframes");
  if (!(frame_rate_hz > 0.0) || !std::isfinite(frame_rate_hz)) throw Error("frame rate must be > 0");
  for (std::size_t i = 0; i < keyframes.size(); ++i) {
    if (!std::isfinite(keyframes[i].timestamp_s)) throw Error("keyframe timestamps must be finite");
    if (i > 0 && !(keyframes[i].timestamp_s > keyframes[i - 1].timestamp_s)) {
      throw Error("keyframe timestamps must be strictly increasing");
    }
    keyframes[i].pose.Validate();
  }
}

int Trajectory::FrameCount() const {
  const double span = end_s() - start_s();
  // Tolerate rounding so that e.g. 2.0 s at 10 Hz yields 21 frames.
  const double frames = std::floor(span * frame_rate_hz + 1e-9);
  return static_cast<int>(frames) + 1;
}

double Trajectory::FrameTime(int k) const {
  return std::min(start_s() + k / frame_rate_hz, end_s());
}

Pose InterpolatePose(const Trajectory& trajectory, double t) {
  const auto& kf = trajectory.keyframes;
  if (kf.empty()) throw Error("empty trajectory");
  if (!(t >= kf.front().timestamp_s && t <= kf.back().timestamp_s)) {
    throw Error("time " + std::to_string(t) + " s is outside the trajectory range");
  }
  // First keyframe with timestamp >= t.
  const auto it = std::lower_bound(kf.begin(), kf.end(), t,
                                   [](const Keyframe& k, double value) { return k.timestamp_s < value; });
  if (it->timestamp_s == t) return it->pose;
  const Keyframe& b = *it;
  const Keyframe& a = *(it - 1);
  const double alpha = (t - a.timestamp_s) / (b.timestamp_s - a.timestamp_s);
  Pose p;
  p.position_m = a.pose.position_m + (b.pose.position_m - a.pose.position_m) * alpha;
  p.orientation = Slerp(a.pose.orientation, b.pose.orientation, alpha);
  return p;
}

}  // namespace vforest
