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

#include "vforest/placement.h"

#include <cmath>
#include <limits>

#include "vforest/error.h"
#include "vforest/terrain.h"

namespace vforest {

int SampleSpecies(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error("species weights must be finite and >= 0");
    total += w;
  }
  if (weights.empty() || !(total > 0.0)) throw Error("species weights must not all be zero");

  const double u = rng.Uniform01() * total;
  double acc = 0.0;
  int last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_positive = static_cast<int>(i);
    acc += weights[i];
    if (u < acc) return static_cast<int>(i);
  }
  // Rounding in the running sum can leave u just above acc.
  return last_positive;
}

PlacementResult PlaceTrees(const Terrain& terrain, double density_per_ha, double min_spacing_m,
                           std::span<const double> species_weights, Rng& rng) {
  if (!(density_per_ha >= 0.0) || !std::isfinite(density_per_ha)) throw Error("tree density must be >= 0");
  if (!(min_spacing_m > 0.0)) throw Error("minimum spacing must be > 0");

  PlacementResult result;
  const double width = terrain.width_m();
  const double depth = terrain.depth_m();
  const double area_ha = width * depth / 10000.0;
  const double target_real = std::round(density_per_ha * area_ha);
  if (target_real > std::numeric_limits<std::uint16_t>::max()) {
    throw Error("tree count exceeds the 16-bit instance id range");
  }
  const long target = static_cast<long>(target_real);
  if (target == 0) return result;

  const long max_consecutive_rejections = 30 * target;
  const double spacing_sq = min_spacing_m * min_spacing_m;
  long consecutive_rejections = 0;
  while (result.accepted < target && consecutive_rejections < max_consecutive_rejections) {
    const Vec2 p{rng.Uniform(0.0, width), rng.Uniform(0.0, depth)};
    ++result.attempted;
    bool ok = true;
    for (const TreeInstance& t : result.trees) {
      const double dx = t.position_xy_m.x - p.x;
      const double dy = t.position_xy_m.y - p.y;
      if (dx * dx + dy * dy < spacing_sq) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++consecutive_rejections;
      continue;
    }
    consecutive_rejections = 0;
    TreeInstance inst;
    inst.instance_id = static_cast<std::uint16_t>(result.trees.size() + 1);
    inst.species_index = SampleSpecies(species_weights, rng);
    inst.position_xy_m = p;
    inst.base_elevation_m = SampleHeight(terrain, p.x, p.y);
    inst.yaw_rad = rng.Uniform(0.0, 2.0 * kPi);
    inst.scale = rng.Uniform(0.8, 1.2);
    inst.seed = rng.NextU64();
    result.trees.push_back(inst);
    ++result.accepted;
  }
  return result;
}

}  // namespace vforest
