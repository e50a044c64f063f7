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

#ifndef VFOREST_PLACEMENT_H_
#define VFOREST_PLACEMENT_H_

#include <span>
#include <vector>

#include "vforest/rng.h"
#include "vforest/scene.h"

namespace vforest {

struct PlacementResult {
  std::vector<TreeInstance> trees;
  long attempted = 0;
  long accepted = 0;
};

// Index i with probability weights[i] / sum(weights). Throws when the
// weights are empty, negative, or all zero.
int SampleSpecies(std::span<const double> weights, Rng& rng);

// Dart throwing over the terrain extent. Targets round(density * area_ha)
// trees; gives up after 30 * target consecutive rejections. Instance ids
// are assigned 1..accepted in acceptance order.
PlacementResult PlaceTrees(const Terrain& terrain, double density_per_ha, double min_spacing_m,
                           std::span<const double> species_weights, Rng& rng);

}  // namespace vforest

#endif  // VFOREST_PLACEMENT_H_
