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

#include "vforest/tree_mesh.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "vforest/error.h"
#include "vforest/rng.h"

namespace vforest {

namespace {

using Tri = std::array<std::uint32_t, 3>;

class MeshBuilder {
 public:
  explicit MeshBuilder(TreeMesh& mesh) : mesh_(mesh) {}

  std::uint32_t Vertex(const Vec3& p) {
    mesh_.vertices.push_back(p);
    return static_cast<std::uint32_t>(mesh_.vertices.size() - 1);
  }
  void Triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c, PartLabel label) {
    mesh_.triangles.push_back({a, b, c});
    mesh_.labels.push_back(label);
  }
  // Quad strip between two rings of equal size, wrapping around.
  void Band(std::uint32_t lower, std::uint32_t upper, int n, PartLabel label) {
    for (int j = 0; j < n; ++j) {
      const auto j1 = static_cast<std::uint32_t>((j + 1) % n);
      const auto jj = static_cast<std::uint32_t>(j);
      Triangle(lower + jj, lower + j1, upper + j1, label);
      Triangle(lower + jj, upper + j1, upper + jj, label);
    }
  }
  // Fan from a ring to a single apex vertex.
  void Fan(std::uint32_t ring, std::uint32_t apex, int n, bool upward, PartLabel label) {
    for (int j = 0; j < n; ++j) {
      const auto j1 = static_cast<std::uint32_t>((j + 1) % n);
      const auto jj = static_cast<std::uint32_t>(j);
      if (upward) {
        Triangle(ring + jj, ring + j1, apex, label);
      } else {
        Triangle(ring + j1, ring + jj, apex, label);
      }
    }
  }

 private:
  TreeMesh& mesh_;
};

double ProfileRadius(double base_radius, double taper, double height, double h) {
  const double frac = std::clamp(1.0 - h / height, 0.0, 1.0);
  if (taper == 0.0) return base_radius;
  return base_radius * std::pow(frac, taper);
}

// Orthonormal pair perpendicular to unit vector d.
void Perpendiculars(const Vec3& d, Vec3& u, Vec3& v) {
  const Vec3 helper = std::abs(d.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  u = Normalized(Cross(helper, d));
  v = Cross(d, u);
}

}  // namespace

double TreeHeight(const SpeciesSpec& species, const TreeInstance& inst) {
  Rng rng = DeriveRng(inst.seed, "tree_height", 0);
  const double h = species.height_min_m == species.height_max_m
                       ? species.height_min_m
                       : rng.Uniform(species.height_min_m, species.height_max_m);
  return inst.scale * h;
}

double TrunkRadius(const SpeciesSpec& species, const TreeInstance& inst, double h) {
  return ProfileRadius(inst.scale * species.trunk_base_radius_m, species.trunk_taper_exponent,
                       TreeHeight(species, inst), h);
}

TreeMesh BuildTreeMesh(const SpeciesSpec& species, const TreeInstance& inst, int radial_segments) {
  if (radial_segments < 3) throw Error("radial_segments must be >= 3");
  species.Validate();

  const int n = radial_segments;
  const double height = TreeHeight(species, inst);
  const double base_radius = inst.scale * species.trunk_base_radius_m;
  const double taper = species.trunk_taper_exponent;
  auto radius_at = [&](double h) { return ProfileRadius(base_radius, taper, height, h); };

  TreeMesh mesh;
  mesh.instance_id = inst.instance_id;
  mesh.bark_albedo = species.bark_albedo;
  mesh.leaf_albedo = species.leaf_albedo;
  MeshBuilder b(mesh);

  // Trunk ring heights: uniform plus breast height.
  const int ring_count = std::max(6, n / 2);
  std::vector<double> ring_heights;
  for (int i = 0; i < ring_count; ++i) ring_heights.push_back(height * i / ring_count);
  if (kBreastHeightM < height) ring_heights.push_back(kBreastHeightM);
  std::sort(ring_heights.begin(), ring_heights.end());
  ring_heights.erase(std::unique(ring_heights.begin(), ring_heights.end()), ring_heights.end());

  std::vector<double> cos_t(n);
  std::vector<double> sin_t(n);
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * kPi * j / n;
    cos_t[j] = std::cos(theta);
    sin_t[j] = std::sin(theta);
  }

  std::uint32_t prev_ring = 0;
  for (std::size_t i = 0; i < ring_heights.size(); ++i) {
    const double h = ring_heights[i];
    const double r = radius_at(h);
    const std::uint32_t ring = static_cast<std::uint32_t>(mesh.vertices.size());
    for (int j = 0; j < n; ++j) b.Vertex({r * cos_t[j], r * sin_t[j], h});
    if (i > 0) b.Band(prev_ring, ring, n, PartLabel::kTrunk);
    prev_ring = ring;
  }
  if (taper > 0.0) {
    const std::uint32_t apex = b.Vertex({0.0, 0.0, height});
    b.Fan(prev_ring, apex, n, true, PartLabel::kTrunk);
  } else {
    const std::uint32_t top = static_cast<std::uint32_t>(mesh.vertices.size());
    for (int j = 0; j < n; ++j) b.Vertex({base_radius * cos_t[j], base_radius * sin_t[j], height});
    // Open top: it always ends inside the crown.
    b.Band(prev_ring, top, n, PartLabel::kTrunk);
  }

  // Branches.
  {
    Rng rng = DeriveRng(inst.seed, "tree_branches", 0);
    const int count = static_cast<int>(rng.UniformInt(species.branch_count_min, species.branch_count_max));
    const int bn = std::max(3, n / 2);
    const double crown_reach = inst.scale * std::max(species.crown_radii_m.x, species.crown_radii_m.y);
    for (int k = 0; k < count; ++k) {
      const double attach = rng.Uniform(0.35, 0.8) * height;
      const double azimuth = rng.Uniform(0.0, 2.0 * kPi);
      const double elevation = rng.Uniform(20.0, 55.0) * kPi / 180.0;
      const double length = rng.Uniform(0.6, 1.0) * crown_reach;
      const double r = species.branch_radius_fraction * radius_at(attach);
      if (!(r > 0.0)) continue;
      const Vec3 dir{std::cos(elevation) * std::cos(azimuth), std::cos(elevation) * std::sin(azimuth),
                     std::sin(elevation)};
      Vec3 u;
      Vec3 v;
      Perpendiculars(dir, u, v);
      const Vec3 start{0.0, 0.0, attach};
      const Vec3 end = start + dir * length;
      const std::uint32_t ring0 = static_cast<std::uint32_t>(mesh.vertices.size());
      for (int j = 0; j < bn; ++j) {
        const double t = 2.0 * kPi * j / bn;
        b.Vertex(start + (u * std::cos(t) + v * std::sin(t)) * r);
      }
      const std::uint32_t ring1 = static_cast<std::uint32_t>(mesh.vertices.size());
      for (int j = 0; j < bn; ++j) {
        const double t = 2.0 * kPi * j / bn;
        b.Vertex(end + (u * std::cos(t) + v * std::sin(t)) * r);
      }
      b.Band(ring0, ring1, bn, PartLabel::kBranch);
      const std::uint32_t tip = b.Vertex(end);
      b.Fan(ring1, tip, bn, true, PartLabel::kBranch);
    }
  }

  // Crown ellipsoid, latitude-longitude tessellation.
  {
    const Vec3 radii = species.crown_radii_m * inst.scale;
    const Vec3 center{0.0, 0.0, 0.75 * height};
    const int lat = std::max(3, n / 2);
    const std::uint32_t south = b.Vertex(center - Vec3{0, 0, radii.z});
    std::uint32_t first_ring = 0;
    std::uint32_t prev = 0;
    for (int i = 1; i < lat; ++i) {
      const double phi = -0.5 * kPi + kPi * i / lat;
      const std::uint32_t ring = static_cast<std::uint32_t>(mesh.vertices.size());
      for (int j = 0; j < n; ++j) {
        b.Vertex(center + Vec3{radii.x * std::cos(phi) * cos_t[j], radii.y * std::cos(phi) * sin_t[j],
                               radii.z * std::sin(phi)});
      }
      if (i == 1) {
        first_ring = ring;
      } else {
        b.Band(prev, ring, n, PartLabel::kLeaf);
      }
      prev = ring;
    }
    b.Fan(first_ring, south, n, false, PartLabel::kLeaf);
    const std::uint32_t north = b.Vertex(center + Vec3{0, 0, radii.z});
    b.Fan(prev, north, n, true, PartLabel::kLeaf);
  }

  // Local -> world: yaw about +z, then translate to the base.
  const double c = std::cos(inst.yaw_rad);
  const double s = std::sin(inst.yaw_rad);
  const Vec3 origin{inst.position_xy_m.x, inst.position_xy_m.y, inst.base_elevation_m};
  for (Vec3& p : mesh.vertices) {
    p = Vec3{c * p.x - s * p.y, s * p.x + c * p.y, p.z} + origin;
  }
  return mesh;
}

double ComputeDbh(const SpeciesSpec& species, const TreeInstance& inst) {
  const double height = TreeHeight(species, inst);
  if (height <= kBreastHeightM) {
    throw Error("tree height " + std::to_string(height) + " m is below breast height (1.3 m)");
  }
  const double frac = 1.0 - kBreastHeightM / height;
  const double profile = species.trunk_taper_exponent == 0.0 ? 1.0 : std::pow(frac, species.trunk_taper_exponent);
  return 2.0 * inst.scale * species.trunk_base_radius_m * profile;
}

Aabb TreeAabb(const TreeMesh& mesh) {
  if (mesh.vertices.empty()) throw Error("cannot bound an empty mesh");
  Aabb box;
  for (const Vec3& p : mesh.vertices) box.Extend(p);
  return box;
}

void WriteObj(std::span<const TreeMesh> meshes, std::ostream& out) {
  out << "# vforest tree meshes\n";
  out.precision(9);
  std::size_t base = 1;
  for (const TreeMesh& mesh : meshes) {
    out << "o tree_" << mesh.instance_id << '\n';
    for (const Vec3& p : mesh.vertices) out << "v " << p.x << ' ' << p.y << ' ' << p.z << '\n';
    bool have_label = false;
    PartLabel current = PartLabel::kTrunk;
    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
      if (!have_label || mesh.labels[i] != current) {
        current = mesh.labels[i];
        have_label = true;
        out << "usemtl " << PartLabelName(current) << '\n';
      }
      const Tri& t = mesh.triangles[i];
      out << "f " << t[0] + base << ' ' << t[1] + base << ' ' << t[2] + base << '\n';
    }
    base += mesh.vertices.size();
  }
}

}  // namespace vforest
