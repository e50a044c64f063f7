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

#include "vforest/terrain.h"

#include <cmath>

#include "vforest/error.h"

namespace vforest {

namespace {

// Lattice value in [-1, 1].
double LatticeValue(std::uint64_t seed, std::int64_t ix, std::int64_t iy) {
  std::uint64_t h = Mix64(seed ^ (static_cast<std::uint64_t>(ix) * 0x8CB92BA72F3D8DD7ULL));
  h = Mix64(h ^ (static_cast<std::uint64_t>(iy) * 0xD6E8FEB86659FD93ULL));
  return static_cast<double>(h >> 11) * 0x1.0p-52 - 1.0;
}

double Smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

double ValueNoise(std::uint64_t seed, double x, double y) {
  const double fx = std::floor(x);
  const double fy = std::floor(y);
  const auto ix = static_cast<std::int64_t>(fx);
  const auto iy = static_cast<std::int64_t>(fy);
  const double tx = Smoothstep(x - fx);
  const double ty = Smoothstep(y - fy);
  const double v00 = LatticeValue(seed, ix, iy);
  const double v10 = LatticeValue(seed, ix + 1, iy);
  const double v01 = LatticeValue(seed, ix, iy + 1);
  const double v11 = LatticeValue(seed, ix + 1, iy + 1);
  const double a = v00 + (v10 - v00) * tx;
  const double b = v01 + (v11 - v01) * tx;
  return a + (b - a) * ty;
}

}  // namespace

Terrain GenerateTerrain(double extent_m, double cell_size_m, double amplitude_m, int octaves,
                        double base_frequency, Rng& rng) {
  if (!std::isfinite(extent_m) || extent_m <= 0.0) throw Error("terrain extent must be finite and > 0");
  if (!std::isfinite(cell_size_m) || cell_size_m <= 0.0) throw Error("terrain cell size must be finite and > 0");
  if (!std::isfinite(amplitude_m) || amplitude_m < 0.0) throw Error("terrain amplitude must be finite and >= 0");
  if (!std::isfinite(base_frequency)) throw Error("terrain base frequency must be finite");
  if (octaves < 1) throw Error("terrain needs at least one octave");

  const int n = static_cast<int>(std::ceil(extent_m / cell_size_m)) + 1;
  // One seed per octave so octaves are decorrelated.
  std::vector<std::uint64_t> octave_seeds(static_cast<std::size_t>(octaves));
  for (auto& s : octave_seeds) s = rng.NextU64();

  std::vector<double> elevations(static_cast<std::size_t>(n) * n, 0.0);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const double x = col * cell_size_m;
      const double y = row * cell_size_m;
      double h = 0.0;
      double amp = amplitude_m;
      double freq = base_frequency;
      for (int k = 0; k < octaves; ++k) {
        h += amp * ValueNoise(octave_seeds[k], x * freq, y * freq);
        amp *= 0.5;
        freq *= 2.0;
      }
      elevations[static_cast<std::size_t>(row) * n + col] = h;
    }
  }
  return Terrain(n, n, cell_size_m, std::move(elevations));
}

double SampleHeight(const Terrain& terrain, double x_m, double y_m) {
  if (!std::isfinite(x_m) || !std::isfinite(y_m) || !terrain.Contains(x_m, y_m)) {
    throw Error("height query (" + std::to_string(x_m) + ", " + std::to_string(y_m) +
                ") is outside the terrain extent");
  }
  const double gx = x_m / terrain.cell_size_m();
  const double gy = y_m / terrain.cell_size_m();
  const int c0 = std::min(static_cast<int>(std::floor(gx)), terrain.cols() - 2);
  const int r0 = std::min(static_cast<int>(std::floor(gy)), terrain.rows() - 2);
  const double tx = gx - c0;
  const double ty = gy - r0;
  const double h00 = terrain.At(c0, r0);
  const double h10 = terrain.At(c0 + 1, r0);
  const double h01 = terrain.At(c0, r0 + 1);
  const double h11 = terrain.At(c0 + 1, r0 + 1);
  return (1 - tx) * (1 - ty) * h00 + tx * (1 - ty) * h10 + (1 - tx) * ty * h01 + tx * ty * h11;
}

TerrainMesh BuildTerrainMesh(const Terrain& terrain) {
  TerrainMesh mesh;
  const int cols = terrain.cols();
  const int rows = terrain.rows();
  mesh.vertices.reserve(static_cast<std::size_t>(cols) * rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      mesh.vertices.push_back({c * terrain.cell_size_m(), r * terrain.cell_size_m(), terrain.At(c, r)});
    }
  }
  mesh.triangles.reserve(static_cast<std::size_t>(cols - 1) * (rows - 1) * 2);
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      const auto i00 = static_cast<std::uint32_t>(r * cols + c);
      const auto i10 = i00 + 1;
      const auto i01 = static_cast<std::uint32_t>((r + 1) * cols + c);
      const auto i11 = i01 + 1;
      mesh.triangles.push_back({i00, i10, i11});
      mesh.triangles.push_back({i00, i11, i01});
    }
  }
  return mesh;
}

}  // namespace vforest
