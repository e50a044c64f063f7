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

#ifndef VFOREST_ANNOTATE_H_
#define VFOREST_ANNOTATE_H_

#include <cstdint>
#include <vector>

#include "vforest/geometry.h"
#include "vforest/raster.h"

namespace vforest {

// Closed polygon in pixel-corner coordinates: pixel (x, y) covers the square
// [x, x+1] x [y, y+1]. The closing edge back to the first vertex is implied.
using Polygon = std::vector<Vec2>;

// COCO box: top-left corner plus extent, in pixels.
struct BBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
  friend bool operator==(const BBox&, const BBox&) = default;
};

struct InstanceAnnotation {
  int annotation_id = 0;
  int image_id = 0;
  int category_id = 1;
  std::uint16_t instance_id = 0;
  BBox bbox;
  double area_px = 0.0;
  // One per 8-connected fragment: the outer contour, then each hole
  // boundary reached by a zero-width bridge from the first vertex. Even-odd
  // fill at pixel centers gives back the fragment exactly.
  std::vector<Polygon> polygons;
  int species_id = -1;
  int iscrowd = 0;
};

inline constexpr int kDefaultMinAreaPx = 16;

// Outer boundary of the 8-connected component containing `start`, which
// must be the component's first pixel in raster order. `member` reports
// whether a pixel belongs to the component. The boundary is followed with
// Moore-neighbor tracing and emitted as the pixel-edge (crack) outline,
// clockwise on screen, with collinear vertices removed.
template <typename Member>
Polygon TraceOuterContour(int start_x, int start_y, Member&& member);

// One annotation per distinct nonzero id, ordered by id. bbox and area are
// exact pixel statistics; instances with fewer than min_area_px pixels are
// dropped. annotation_id/image_id/species_id are left for the exporter.
std::vector<InstanceAnnotation> ExtractInstances(const Gray16Image& instance_raster,
                                                 int min_area_px = kDefaultMinAreaPx);

// Union of the polygons, each filled even-odd at pixel centers.
Raster<std::uint8_t> RasterizePolygons(const std::vector<Polygon>& polygons, int width, int height);

// --- implementation ---------------------------------------------------------

namespace internal {
// Moore neighborhood, clockwise on screen starting at west.
inline constexpr int kMooreDx[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
inline constexpr int kMooreDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};
int MooreDirection(int dx, int dy);
void AppendCrackEdgeStart(int x, int y, int dir, Polygon& out);
Polygon SimplifyRectilinear(const Polygon& p);
}  // namespace internal

template <typename Member>
Polygon TraceOuterContour(int start_x, int start_y, Member&& member) {
  using internal::kMooreDx;
  using internal::kMooreDy;
  Polygon raw;
  int x = start_x;
  int y = start_y;
  int backtrack = 0;  // west of the first raster pixel is always outside
  // Each directed boundary edge is emitted once; the walk closes when the
  // first edge (west side of the start pixel) would be emitted again.
  bool first_edge_emitted = false;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < 8; ++i) {
      const int dir = (backtrack + i) % 8;
      const int nx = x + kMooreDx[dir];
      const int ny = y + kMooreDy[dir];
      if (member(nx, ny)) {
        const int prev = (dir + 7) % 8;
        backtrack = internal::MooreDirection(x + kMooreDx[prev] - nx, y + kMooreDy[prev] - ny);
        x = nx;
        y = ny;
        moved = true;
        break;
      }
      if (dir % 2 == 0) {
        if (x == start_x && y == start_y && dir == 0) {
          if (first_edge_emitted) return internal::SimplifyRectilinear(raw);
          first_edge_emitted = true;
        }
        internal::AppendCrackEdgeStart(x, y, dir, raw);
      }
    }
    if (!moved) break;  // isolated pixel: the sweep emitted all four sides
  }
  return internal::SimplifyRectilinear(raw);
}

}  // namespace vforest

#endif  // VFOREST_ANNOTATE_H_
