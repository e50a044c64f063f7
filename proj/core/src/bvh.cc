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

#include "vforest/bvh.h"

#include <algorithm>
#include <cmath>

#include "vforest/error.h"

namespace vforest {

namespace {

constexpr int kBins = 16;
constexpr std::uint32_t kMaxLeafSize = 4;
// Slab-test exit distances are inflated by this factor so rounding can
// never cull a box that the exact ray passes through.
constexpr double kSlabSlack = 1.0 + 4.0 * std::numeric_limits<double>::epsilon();

Aabb PaddedBounds(const Triangle& t) {
  Aabb b;
  b.Extend(t.v0);
  b.Extend(t.v1);
  b.Extend(t.v2);
  for (int a = 0; a < 3; ++a) {
    const double pad = 1e-12 + 1e-12 * std::max(std::abs(b.min[a]), std::abs(b.max[a]));
    b.min[a] -= pad;
    b.max[a] += pad;
  }
  return b;
}

struct RayPrecomp {
  Vec3 origin;
  Vec3 inv_dir;
  std::array<bool, 3> zero{};
  std::array<int, 3> neg{};
};

RayPrecomp Precompute(const Ray& ray) {
  RayPrecomp r;
  r.origin = ray.origin;
  for (int a = 0; a < 3; ++a) {
    r.zero[a] = ray.direction[a] == 0.0;
    r.inv_dir[a] = r.zero[a] ? 0.0 : 1.0 / ray.direction[a];
    r.neg[a] = ray.direction[a] < 0.0 ? 1 : 0;
  }
  return r;
}

// True when the ray overlaps the box within [t_min, t_max]; t_entry is the
// entry distance.
inline bool SlabTest(const Aabb& b, const RayPrecomp& r, double t_min, double t_max, double& t_entry) {
  double t0 = t_min;
  double t1 = t_max;
  for (int a = 0; a < 3; ++a) {
    if (r.zero[a]) {
      if (r.origin[a] < b.min[a] || r.origin[a] > b.max[a]) return false;
      continue;
    }
    const double lo = r.neg[a] ? b.max[a] : b.min[a];
    const double hi = r.neg[a] ? b.min[a] : b.max[a];
    const double near = (lo - r.origin[a]) * r.inv_dir[a];
    const double far = (hi - r.origin[a]) * r.inv_dir[a] * kSlabSlack;
    t0 = near > t0 ? near : t0;
    t1 = far < t1 ? far : t1;
    if (t0 > t1) return false;
  }
  t_entry = t0;
  return true;
}

}  // namespace

bool IntersectTriangle(const Ray& ray, const Triangle& tri, double t_min, double t_max, double& t, double& u,
                       double& v) {
  const Vec3 e1 = tri.v1 - tri.v0;
  const Vec3 e2 = tri.v2 - tri.v0;
  const Vec3 pvec = Cross(ray.direction, e2);
  const double det = Dot(e1, pvec);
  if (det == 0.0 || !std::isfinite(det)) return false;
  const double inv_det = 1.0 / det;
  const Vec3 tvec = ray.origin - tri.v0;
  const double uu = Dot(tvec, pvec) * inv_det;
  if (uu < 0.0 || uu > 1.0) return false;
  const Vec3 qvec = Cross(tvec, e1);
  const double vv = Dot(ray.direction, qvec) * inv_det;
  if (vv < 0.0 || uu + vv > 1.0) return false;
  const double tt = Dot(e2, qvec) * inv_det;
  if (!(tt > t_min && tt < t_max)) return false;
  t = tt;
  u = uu;
  v = vv;
  return true;
}

Bvh::Bvh(std::vector<Triangle> triangles, std::vector<SurfaceInfo> info)
    : triangles_(std::move(triangles)), info_(std::move(info)) {
  if (info_.size() != triangles_.size()) throw Error("BVH needs one SurfaceInfo per triangle");
  if (triangles_.size() >= std::numeric_limits<std::uint32_t>::max()) throw Error("too many triangles");
  const auto n = static_cast<std::uint32_t>(triangles_.size());
  if (n == 0) return;
  order_.resize(n);
  std::vector<Aabb> prim_bounds(n);
  std::vector<Vec3> centroids(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    order_[i] = i;
    prim_bounds[i] = PaddedBounds(triangles_[i]);
    centroids[i] = (triangles_[i].v0 + triangles_[i].v1 + triangles_[i].v2) / 3.0;
  }
  nodes_.reserve(2 * n / kMaxLeafSize + 1);
  Build(0, n, prim_bounds, centroids);
}

std::uint32_t Bvh::Build(std::uint32_t begin, std::uint32_t end, std::vector<Aabb>& prim_bounds,
                         std::vector<Vec3>& centroids) {
  const auto node_index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({});
  Aabb bounds;
  Aabb centroid_bounds;
  for (std::uint32_t i = begin; i < end; ++i) {
    bounds.Extend(prim_bounds[order_[i]]);
    centroid_bounds.Extend(centroids[order_[i]]);
  }
  nodes_[node_index].bounds = bounds;
  const std::uint32_t count = end - begin;

  auto make_leaf = [&] {
    nodes_[node_index].first = begin;
    nodes_[node_index].count = count;
    return node_index;
  };
  if (count <= kMaxLeafSize) return make_leaf();

  // Binned SAH along each axis; keep the cheapest split.
  const Vec3 extent = centroid_bounds.Extent();
  int best_axis = -1;
  int best_split = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < 3; ++axis) {
    if (!(extent[axis] > 0.0)) continue;
    std::array<Aabb, kBins> bin_bounds;
    std::array<std::uint32_t, kBins> bin_counts{};
    const double scale = kBins / extent[axis];
    for (std::uint32_t i = begin; i < end; ++i) {
      const std::uint32_t p = order_[i];
      const int bin = std::min(kBins - 1, static_cast<int>((centroids[p][axis] - centroid_bounds.min[axis]) * scale));
      bin_counts[bin]++;
      bin_bounds[bin].Extend(prim_bounds[p]);
    }
    std::array<double, kBins - 1> left_area{};
    std::array<std::uint32_t, kBins - 1> left_count{};
    Aabb acc;
    std::uint32_t acc_count = 0;
    for (int i = 0; i < kBins - 1; ++i) {
      acc.Extend(bin_bounds[i]);
      acc_count += bin_counts[i];
      left_area[i] = acc.SurfaceArea();
      left_count[i] = acc_count;
    }
    acc = Aabb{};
    acc_count = 0;
    for (int i = kBins - 1; i > 0; --i) {
      acc.Extend(bin_bounds[i]);
      acc_count += bin_counts[i];
      if (left_count[i - 1] == 0 || acc_count == 0) continue;
      const double cost = left_area[i - 1] * left_count[i - 1] + acc.SurfaceArea() * acc_count;
      if (cost < best_cost) {
        best_cost = cost;
        best_axis = axis;
        best_split = i;
      }
    }
  }

  std::uint32_t mid;
  if (best_axis < 0) {
    // All centroids coincide; split by index.
    mid = begin + count / 2;
  } else {
    const double leaf_cost = bounds.SurfaceArea() * count;
    if (best_cost >= leaf_cost && count <= 2 * kMaxLeafSize) return make_leaf();
    const double scale = kBins / extent[best_axis];
    const double lo = centroid_bounds.min[best_axis];
    auto* first = order_.data() + begin;
    auto* last = order_.data() + end;
    auto* split = std::partition(first, last, [&](std::uint32_t p) {
      const int bin = std::min(kBins - 1, static_cast<int>((centroids[p][best_axis] - lo) * scale));
      return bin < best_split;
    });
    mid = static_cast<std::uint32_t>(split - order_.data());
    if (mid == begin || mid == end) mid = begin + count / 2;
  }

  Build(begin, mid, prim_bounds, centroids);
  const std::uint32_t right = Build(mid, end, prim_bounds, centroids);
  nodes_[node_index].first = right;
  nodes_[node_index].count = 0;
  return node_index;
}

std::optional<Hit> Bvh::Intersect(const Ray& ray, double t_max) const {
  if (nodes_.empty()) return std::nullopt;
  const RayPrecomp rp = Precompute(ray);
  Hit best;
  bool found = false;
  double best_t = t_max;

  std::array<std::uint32_t, 256> stack;
  int sp = 0;
  double entry = 0.0;
  if (!SlabTest(nodes_[0].bounds, rp, kRayTMin, best_t, entry)) return std::nullopt;
  stack[sp++] = 0;
  while (sp > 0) {
    const Node& node = nodes_[stack[--sp]];
    // Entry distance equal to best_t is still visited: a tie on t can be
    // won by a lower triangle index.
    if (!SlabTest(node.bounds, rp, kRayTMin, best_t, entry)) continue;
    if (node.count > 0) {
      for (std::uint32_t i = node.first; i < node.first + node.count; ++i) {
        const std::uint32_t p = order_[i];
        double t;
        double u;
        double v;
        // Accept t == best_t here and resolve the tie by index below.
        if (!IntersectTriangle(ray, triangles_[p], kRayTMin, std::nextafter(best_t, INFINITY), t, u, v)) continue;
        if (!(t < t_max)) continue;
        if (!found || t < best_t || (t == best_t && p < best.triangle)) {
          best = {t, p, u, v};
          best_t = t;
          found = true;
        }
      }
      continue;
    }
    const std::uint32_t left = static_cast<std::uint32_t>(&node - nodes_.data()) + 1;
    const std::uint32_t right = node.first;
    double tl = 0.0;
    double tr = 0.0;
    const bool hl = SlabTest(nodes_[left].bounds, rp, kRayTMin, best_t, tl);
    const bool hr = SlabTest(nodes_[right].bounds, rp, kRayTMin, best_t, tr);
    if (sp + 2 > static_cast<int>(stack.size())) throw Error("BVH traversal stack overflow");
    if (hl && hr) {
      // Push the farther child first so the nearer one is popped next.
      if (tl <= tr) {
        stack[sp++] = right;
        stack[sp++] = left;
      } else {
        stack[sp++] = left;
        stack[sp++] = right;
      }
    } else if (hl) {
      stack[sp++] = left;
    } else if (hr) {
      stack[sp++] = right;
    }
  }
  if (!found) return std::nullopt;
  return best;
}

bool Bvh::Occluded(const Ray& ray, double t_max) const {
  if (nodes_.empty()) return false;
  const RayPrecomp rp = Precompute(ray);
  std::array<std::uint32_t, 256> stack;
  int sp = 0;
  stack[sp++] = 0;
  double entry = 0.0;
  while (sp > 0) {
    const Node& node = nodes_[stack[--sp]];
    if (!SlabTest(node.bounds, rp, kRayTMin, t_max, entry)) continue;
    if (node.count > 0) {
      for (std::uint32_t i = node.first; i < node.first + node.count; ++i) {
        double t;
        double u;
        double v;
        if (IntersectTriangle(ray, triangles_[order_[i]], kRayTMin, t_max, t, u, v)) return true;
      }
      continue;
    }
    if (sp + 2 > static_cast<int>(stack.size())) throw Error("BVH traversal stack overflow");
    stack[sp++] = node.first;
    stack[sp++] = static_cast<std::uint32_t>(&node - nodes_.data()) + 1;
  }
  return false;
}

Vec3 Bvh::Normal(std::uint32_t i) const {
  const Triangle& t = triangles_[i];
  const Vec3 n = Cross(t.v1 - t.v0, t.v2 - t.v0);
  const double len = Norm(n);
  return len > 0.0 ? n / len : Vec3{0.0, 0.0, 1.0};
}

Bvh BuildSceneBvh(std::span<const TreeMesh> trees, const TerrainMesh* terrain, const Rgb& terrain_albedo) {
  std::vector<Triangle> tris;
  std::vector<SurfaceInfo> info;
  std::size_t total = terrain ? terrain->triangles.size() : 0;
  for (const TreeMesh& m : trees) total += m.triangles.size();
  tris.reserve(total);
  info.reserve(total);
  if (terrain != nullptr) {
    for (const auto& t : terrain->triangles) {
      tris.push_back({terrain->vertices[t[0]], terrain->vertices[t[1]], terrain->vertices[t[2]]});
      info.push_back({0, SurfaceClass::kTerrain, terrain_albedo});
    }
  }
  for (const TreeMesh& m : trees) {
    for (std::size_t i = 0; i < m.triangles.size(); ++i) {
      const auto& t = m.triangles[i];
      tris.push_back({m.vertices[t[0]], m.vertices[t[1]], m.vertices[t[2]]});
      const SurfaceClass cls = ToSurfaceClass(m.labels[i]);
      info.push_back({m.instance_id, cls, cls == SurfaceClass::kLeaf ? m.leaf_albedo : m.bark_albedo});
    }
  }
  return Bvh(std::move(tris), std::move(info));
}

}  // namespace vforest
