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

#ifndef VFOREST_TESTS_ORACLES_H_
#define VFOREST_TESTS_ORACLES_H_

// Brute-force reference computations used to check the library. Nothing
// here calls the code path it is checking.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "vforest/annotate.h"
#include "vforest/bvh.h"
#include "vforest/raster.h"
#include "vforest/scene.h"
#include "vforest/tree_mesh.h"

namespace vforest::oracle {

// Linear scan over every triangle: smallest t wins, ties to the lower index.
inline std::optional<Hit> BruteForceIntersect(const std::vector<Triangle>& tris, const Ray& ray,
                                              double t_max = std::numeric_limits<double>::infinity()) {
  std::optional<Hit> best;
  for (std::uint32_t i = 0; i < tris.size(); ++i) {
    double t, u, v;
    if (!IntersectTriangle(ray, tris[i], kRayTMin, t_max, t, u, v)) continue;
    if (!best || t < best->t) best = Hit{t, i, u, v};
  }
  return best;
}

struct PixelStats {
  int min_x = std::numeric_limits<int>::max();
  int min_y = std::numeric_limits<int>::max();
  int max_x = -1;
  int max_y = -1;
  long area = 0;
};

// Per-id bounds and pixel counts from a full raster rescan.
inline std::map<std::uint16_t, PixelStats> ScanInstances(const Gray16Image& raster) {
  std::map<std::uint16_t, PixelStats> out;
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      const std::uint16_t id = raster.at(x, y);
      if (id == 0) continue;
      PixelStats& s = out[id];
      s.min_x = std::min(s.min_x, x);
      s.min_y = std::min(s.min_y, y);
      s.max_x = std::max(s.max_x, x);
      s.max_y = std::max(s.max_y, y);
      ++s.area;
    }
  }
  return out;
}

// Crossing-count point-in-polygon test.
inline bool InsidePolygon(const Polygon& p, double px, double py) {
  bool inside = false;
  const std::size_t n = p.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const bool crosses = (p[i].y > py) != (p[j].y > py);
    if (crosses && px < (p[j].x - p[i].x) * (py - p[i].y) / (p[j].y - p[i].y) + p[i].x) inside = !inside;
  }
  return inside;
}

// Inside any of the polygons, as COCO tools merge multi-polygon masks.
inline bool InsideAny(const std::vector<Polygon>& polys, double px, double py) {
  for (const Polygon& p : polys) {
    if (InsidePolygon(p, px, py)) return true;
  }
  return false;
}

// |refill XOR original| for one instance id.
inline long SymmetricDifference(const Gray16Image& raster, std::uint16_t id, const std::vector<Polygon>& polys) {
  long diff = 0;
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      const bool orig = raster.at(x, y) == id;
      const bool fill = InsideAny(polys, x + 0.5, y + 0.5);
      diff += orig != fill;
    }
  }
  return diff;
}

struct SliceMeasure {
  double girth_diameter = 0.0;      // perimeter / pi
  double max_chord = 0.0;           // largest vertex-to-vertex distance
  int segments = 0;
};

// Cuts the trunk triangles with the horizontal plane z = plane_z. Vertices
// exactly on the plane count as above, so an edge lying in the plane is
// produced once, by the triangle below it.
inline SliceMeasure SliceTrunk(const TreeMesh& mesh, double plane_z) {
  SliceMeasure m;
  std::vector<Vec3> points;
  double perimeter = 0.0;
  for (std::size_t f = 0; f < mesh.triangles.size(); ++f) {
    if (mesh.labels[f] != PartLabel::kTrunk) continue;
    const auto& tri = mesh.triangles[f];
    Vec3 crossings[3];
    int n = 0;
    for (int e = 0; e < 3; ++e) {
      const Vec3& a = mesh.vertices[tri[e]];
      const Vec3& b = mesh.vertices[tri[(e + 1) % 3]];
      const bool a_above = a.z >= plane_z;
      const bool b_above = b.z >= plane_z;
      if (a_above == b_above) continue;
      const double s = (plane_z - a.z) / (b.z - a.z);
      crossings[n++] = a + (b - a) * s;
    }
    if (n != 2) continue;
    const double len = Norm(crossings[1] - crossings[0]);
    if (len == 0.0) continue;  // plane touches the triangle at one vertex
    perimeter += len;
    points.push_back(crossings[0]);
    points.push_back(crossings[1]);
    ++m.segments;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) m.max_chord = std::max(m.max_chord, Norm(points[i] - points[j]));
  }
  m.girth_diameter = perimeter / kPi;
  return m;
}

inline double MinPairwiseDistance(const std::vector<TreeInstance>& trees) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      const Vec2 d = trees[i].position_xy_m - trees[j].position_xy_m;
      best = std::min(best, std::sqrt(d.x * d.x + d.y * d.y));
    }
  }
  return best;
}

}  // namespace vforest::oracle

#endif  // VFOREST_TESTS_ORACLES_H_
