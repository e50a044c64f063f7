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

#ifndef VFOREST_BVH_H_
#define VFOREST_BVH_H_

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "vforest/geometry.h"
#include "vforest/scene.h"
#include "vforest/terrain.h"
#include "vforest/tree_mesh.h"

namespace vforest {

// Rays never report hits at t <= kRayTMin.
inline constexpr double kRayTMin = 1e-9;

struct Triangle {
  Vec3 v0;
  Vec3 v1;
  Vec3 v2;
};

// What a triangle is, for shading and labeling.
struct SurfaceInfo {
  std::uint16_t instance_id = 0;  // 0 for terrain
  SurfaceClass surface = SurfaceClass::kTerrain;
  Rgb albedo;
};

struct Hit {
  double t = 0.0;
  std::uint32_t triangle = 0;  // index in input order
  double u = 0.0;
  double v = 0.0;
};

// Moller-Trumbore. On success writes t in (t_min, t_max) and barycentrics.
bool IntersectTriangle(const Ray& ray, const Triangle& tri, double t_min, double t_max, double& t, double& u,
                       double& v);

// Binary bounding-volume hierarchy over triangles, built with a binned
// surface-area heuristic. Immutable after construction; queries are
// thread-safe. The nearest hit is the smallest t, ties going to the lower
// triangle index, so results match a linear scan exactly.
class Bvh {
 public:
  Bvh() = default;
  Bvh(std::vector<Triangle> triangles, std::vector<SurfaceInfo> info);

  std::optional<Hit> Intersect(const Ray& ray, double t_max = std::numeric_limits<double>::infinity()) const;
  bool Occluded(const Ray& ray, double t_max) const;

  std::size_t size() const { return triangles_.size(); }
  bool empty() const { return triangles_.empty(); }
  const Triangle& triangle(std::uint32_t i) const { return triangles_[i]; }
  const SurfaceInfo& info(std::uint32_t i) const { return info_[i]; }
  std::span<const Triangle> triangles() const { return triangles_; }
  Aabb bounds() const { return nodes_.empty() ? Aabb{} : nodes_.front().bounds; }
  // Unit geometric normal (right-hand winding).
  Vec3 Normal(std::uint32_t i) const;
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Aabb bounds;
    std::uint32_t first = 0;   // leaf: first index into order_; inner: right child
    std::uint32_t count = 0;   // 0 for inner nodes
  };

  std::uint32_t Build(std::uint32_t begin, std::uint32_t end, std::vector<Aabb>& prim_bounds,
                      std::vector<Vec3>& centroids);

  std::vector<Triangle> triangles_;
  std::vector<SurfaceInfo> info_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
};

// Scene BVH over every tree mesh plus an optional terrain mesh.
Bvh BuildSceneBvh(std::span<const TreeMesh> trees, const TerrainMesh* terrain, const Rgb& terrain_albedo);

}  // namespace vforest

#endif  // VFOREST_BVH_H_
