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

#ifndef VFOREST_TREE_MESH_H_
#define VFOREST_TREE_MESH_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "vforest/geometry.h"
#include "vforest/scene.h"

namespace vforest {

inline constexpr double kBreastHeightM = 1.3;

// World-space triangle mesh of one tree with a part label per triangle.
struct TreeMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<PartLabel> labels;
  std::uint16_t instance_id = 0;
  Rgb bark_albedo;
  Rgb leaf_albedo;
};

// scale * U(height_min, height_max), drawn from the instance seed.
double TreeHeight(const SpeciesSpec& species, const TreeInstance& inst);

// Trunk radius at height h above the base: scale * r0 * (1 - h/H)^taper.
double TrunkRadius(const SpeciesSpec& species, const TreeInstance& inst, double height_above_base_m);

// Builds trunk (surface of revolution), branches (cylinders) and crown
// (ellipsoid centered at 0.75 H), then rotates by yaw and translates to
// the tree base. A vertex ring is placed at breast height when the tree
// is taller than it. Throws when radial_segments < 3.
TreeMesh BuildTreeMesh(const SpeciesSpec& species, const TreeInstance& inst, int radial_segments);

// Analytic diameter at breast height (1.3 m above the base). Throws when the
// tree is not taller than breast height.
double ComputeDbh(const SpeciesSpec& species, const TreeInstance& inst);

// Throws on an empty mesh.
Aabb TreeAabb(const TreeMesh& mesh);

// ASCII OBJ with one `usemtl trunk|branch|leaf` group per label run.
void WriteObj(std::span<const TreeMesh> meshes, std::ostream& out);

}  // namespace vforest

#endif  // VFOREST_TREE_MESH_H_
