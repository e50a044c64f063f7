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

#include "vforest/annotate.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "vforest/error.h"

namespace vforest {

namespace internal {

int MooreDirection(int dx, int dy) {
  for (int d = 0; d < 8; ++d) {
    if (kMooreDx[d] == dx && kMooreDy[d] == dy) return d;
  }
  throw Error("not a Moore neighbor offset");
}

void AppendCrackEdgeStart(int x, int y, int dir, Polygon& out) {
  switch (dir) {
    case 0: out.push_back({static_cast<double>(x), static_cast<double>(y + 1)}); break;      // west, upward
    case 2: out.push_back({static_cast<double>(x), static_cast<double>(y)}); break;          // north, rightward
    case 4: out.push_back({static_cast<double>(x + 1), static_cast<double>(y)}); break;      // east, downward
    case 6: out.push_back({static_cast<double>(x + 1), static_cast<double>(y + 1)}); break;  // south, leftward
    default: throw Error("crack edges exist only toward 4-neighbors");
  }
}

Polygon SimplifyRectilinear(const Polygon& p) {
  const std::size_t n = p.size();
  if (n < 3) return p;
  Polygon out;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = p[(i + n - 1) % n];
    const Vec2& cur = p[i];
    const Vec2& next = p[(i + 1) % n];
    const Vec2 a = cur - prev;
    const Vec2 b = next - cur;
    const bool collinear = a.x * b.y - a.y * b.x == 0.0 && a.x * b.x + a.y * b.y > 0.0;
    if (!collinear) out.push_back(cur);
  }
  return out;
}

namespace {

// Unit crack edge: horizontal from (x, y) to (x + 1, y), or vertical from
// (x, y) to (x, y + 1).
struct CrackEdge {
  int x;
  int y;
  bool vertical;
  auto operator<=>(const CrackEdge&) const = default;
};

std::pair<int, int> OtherEnd(const CrackEdge& e, int x, int y) {
  const int ex = e.vertical ? e.x : e.x + 1;
  const int ey = e.vertical ? e.y + 1 : e.y;
  return (x == e.x && y == e.y) ? std::pair{ex, ey} : std::pair{e.x, e.y};
}

// Appends the hole boundaries of one component to its outer contour.
void AppendHoleLoops(const std::vector<std::pair<int, int>>& pixels, const std::function<bool(int, int)>& member,
                     Polygon& outer) {
  std::set<CrackEdge> edges;
  auto toggle = [&](CrackEdge e) {
    if (!edges.erase(e)) edges.insert(e);
  };
  for (const auto& [x, y] : pixels) {
    if (!member(x - 1, y)) toggle({x, y, true});
    if (!member(x + 1, y)) toggle({x + 1, y, true});
    if (!member(x, y - 1)) toggle({x, y, false});
    if (!member(x, y + 1)) toggle({x, y + 1, false});
  }
  // Remove the outer contour; what is left bounds the holes.
  const std::size_t n = outer.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = outer[i];
    const Vec2& b = outer[(i + 1) % n];
    const int ax = static_cast<int>(a.x), ay = static_cast<int>(a.y);
    const int bx = static_cast<int>(b.x), by = static_cast<int>(b.y);
    for (int x = std::min(ax, bx); x < std::max(ax, bx); ++x) toggle({x, ay, false});
    for (int y = std::min(ay, by); y < std::max(ay, by); ++y) toggle({ax, y, true});
  }
  if (edges.empty()) return;

  std::multimap<std::pair<int, int>, CrackEdge> at;
  for (const CrackEdge& e : edges) {
    at.insert({{e.x, e.y}, e});
    at.insert({OtherEnd(e, e.x, e.y), e});
  }
  const Vec2 anchor = outer.front();
  outer.push_back(anchor);
  while (!edges.empty()) {
    const CrackEdge first = *edges.begin();
    Polygon loop;
    int x = first.x;
    int y = first.y;
    for (;;) {
      auto range = at.equal_range({x, y});
      auto it = range.first;
      while (it != range.second && !edges.count(it->second)) ++it;
      if (it == range.second) break;
      const CrackEdge e = it->second;
      edges.erase(e);
      loop.push_back({static_cast<double>(x), static_cast<double>(y)});
      std::tie(x, y) = OtherEnd(e, x, y);
    }
    // Zero-width bridge from the anchor into the loop and back.
    const Polygon simple = SimplifyRectilinear(loop);
    outer.insert(outer.end(), simple.begin(), simple.end());
    outer.push_back(simple.front());
    outer.push_back(anchor);
  }
}

}  // namespace

}  // namespace internal

std::vector<InstanceAnnotation> ExtractInstances(const Gray16Image& raster, int min_area_px) {
  if (raster.channels != 1) throw Error("instance raster must be single-channel");
  const int w = raster.width;
  const int h = raster.height;

  struct Stats {
    int min_x = 0, min_y = 0, max_x = -1, max_y = -1;
    long area = 0;
  };
  std::map<std::uint16_t, Stats> stats;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::uint16_t id = raster.at(x, y);
      if (id == 0) continue;
      auto [it, inserted] = stats.try_emplace(id);
      Stats& s = it->second;
      if (inserted) {
        s.min_x = s.max_x = x;
        s.min_y = s.max_y = y;
      }
      s.min_x = std::min(s.min_x, x);
      s.max_x = std::max(s.max_x, x);
      s.min_y = std::min(s.min_y, y);
      s.max_y = std::max(s.max_y, y);
      ++s.area;
    }
  }

  // 8-connected component labels, assigned in raster order of each
  // component's first pixel.
  std::vector<int> component(static_cast<std::size_t>(w) * h, -1);
  std::map<std::uint16_t, std::vector<std::pair<int, int>>> component_starts;
  std::vector<std::vector<std::pair<int, int>>> component_pixels;
  std::vector<std::pair<int, int>> stack;
  int next_label = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::uint16_t id = raster.at(x, y);
      if (id == 0 || component[static_cast<std::size_t>(y) * w + x] >= 0) continue;
      if (stats[id].area < min_area_px) continue;
      const int label = next_label++;
      component_starts[id].push_back({x, y});
      component_pixels.emplace_back();
      stack.assign(1, {x, y});
      component[static_cast<std::size_t>(y) * w + x] = label;
      while (!stack.empty()) {
        const auto [cx, cy] = stack.back();
        stack.pop_back();
        component_pixels[static_cast<std::size_t>(label)].push_back({cx, cy});
        for (int d = 0; d < 8; ++d) {
          const int nx = cx + internal::kMooreDx[d];
          const int ny = cy + internal::kMooreDy[d];
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          const std::size_t idx = static_cast<std::size_t>(ny) * w + nx;
          if (component[idx] >= 0 || raster.at(nx, ny) != id) continue;
          component[idx] = label;
          stack.push_back({nx, ny});
        }
      }
    }
  }

  std::vector<InstanceAnnotation> out;
  for (const auto& [id, s] : stats) {
    if (s.area < min_area_px) continue;
    InstanceAnnotation ann;
    ann.instance_id = id;
    ann.bbox = {static_cast<double>(s.min_x), static_cast<double>(s.min_y), static_cast<double>(s.max_x - s.min_x + 1),
                static_cast<double>(s.max_y - s.min_y + 1)};
    ann.area_px = static_cast<double>(s.area);
    for (const auto& [sx, sy] : component_starts[id]) {
      const int label = component[static_cast<std::size_t>(sy) * w + sx];
      auto member = [&](int px, int py) {
        return px >= 0 && py >= 0 && px < w && py < h && component[static_cast<std::size_t>(py) * w + px] == label;
      };
      Polygon outer = TraceOuterContour(sx, sy, member);
      internal::AppendHoleLoops(component_pixels[static_cast<std::size_t>(label)], member, outer);
      ann.polygons.push_back(std::move(outer));
    }
    out.push_back(std::move(ann));
  }
  return out;
}

Raster<std::uint8_t> RasterizePolygons(const std::vector<Polygon>& polygons, int width, int height) {
  Raster<std::uint8_t> mask(width, height, 1, 0);
  std::vector<double> xs;
  for (const Polygon& poly : polygons) {
    const std::size_t n = poly.size();
    for (int y = 0; y < height; ++y) {
      const double yc = y + 0.5;
      xs.clear();
      for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        // Half-open rule so vertices on the scanline are counted once.
        if ((a.y <= yc) == (b.y <= yc)) continue;
        xs.push_back(a.x + (yc - a.y) * (b.x - a.x) / (b.y - a.y));
      }
      std::sort(xs.begin(), xs.end());
      for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
        // Pixel x is inside when its center x + 0.5 lies in [xs[i], xs[i+1]).
        const int x0 = std::max(0, static_cast<int>(std::ceil(xs[i] - 0.5)));
        const int x1 = std::min(width, static_cast<int>(std::ceil(xs[i + 1] - 0.5)));
        for (int x = x0; x < x1; ++x) mask.at(x, y) = 1;
      }
    }
  }
  return mask;
}

}  // namespace vforest
