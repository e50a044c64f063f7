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

#ifndef VFOREST_TERRAIN_H_
#define VFOREST_TERRAIN_H_

#include <array>
#include <cstdint>
#include <vector>

#include "vforest/geometry.h"
#include "vforest/rng.h"
#include "vforest/scene.h"

namespace vforest {

// Fractional Brownian motion over lattice value noise:
//   h(p) = sum_k amplitude * 0.5^k * noise(p * base_frequency * 2^k)
// with noise in [-1, 1], so |h| < 2 * amplitude. The grid has
// ceil(extent / cell) + 1 nodes per side.
Terrain GenerateTerrain(double extent_m, double cell_size_m, double amplitude_m, int octaves,
                        double base_frequency, Rng& rng);

inline Terrain GenerateTerrain(const TerrainParams& p, Rng& rng) {
  return GenerateTerrain(p.extent_m, p.cell_size_m, p.amplitude_m, p.octaves, p.base_frequency, rng);
}

// Bilinear interpolation; throws vforest::Error outside the grid.
double SampleHeight(const Terrain& terrain, double x_m, double y_m);

// Two triangles per grid cell, counter-clockwise seen from above.
struct TerrainMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
};

TerrainMesh BuildTerrainMesh(const Terrain& terrain);

}  // namespace vforest

#endif  // VFOREST_TERRAIN_H_
