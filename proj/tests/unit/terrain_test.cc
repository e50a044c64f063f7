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

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "vforest/error.h"
#include "vforest/rng.h"

namespace vforest {
namespace {

TEST(TerrainTest, ZeroAmplitudeIsFlat) {
  Rng rng = DeriveRng(3, "terrain", 0);
  const Terrain t = GenerateTerrain(50, 2, 0.0, 3, 0.05, rng);
  for (double e : t.elevations_m()) EXPECT_EQ(e, 0.0);
}

TEST(TerrainTest, SameSeedSameGrid) {
  Rng a = DeriveRng(7, "terrain", 0);
  Rng b = DeriveRng(7, "terrain", 0);
  EXPECT_EQ(GenerateTerrain(30, 1, 4, 4, 0.03, a).elevations_m(), GenerateTerrain(30, 1, 4, 4, 0.03, b).elevations_m());
}

TEST(TerrainTest, GridSizeAndAmplitudeBound) {
  Rng rng = DeriveRng(7, "terrain", 0);
  const Terrain t = GenerateTerrain(100, 1, 5, 4, 0.02, rng);
  EXPECT_EQ(t.cols(), 101);
  EXPECT_EQ(t.rows(), 101);
  double max_abs = 0.0;
  for (double e : t.elevations_m()) max_abs = std::max(max_abs, std::abs(e));
  // Geometric series 5 * (1 + 1/2 + 1/4 + 1/8) < 10.
  EXPECT_LE(max_abs, 10.0);
  EXPECT_GT(max_abs, 0.0);
}

TEST(TerrainTest, NonDivisibleExtentRoundsUp) {
  Rng rng = DeriveRng(1, "terrain", 0);
  const Terrain t = GenerateTerrain(10.5, 2, 1, 1, 0.1, rng);
  EXPECT_EQ(t.cols(), 7);
}

TEST(TerrainTest, RejectsBadParameters) {
  Rng rng = DeriveRng(1, "terrain", 0);
  EXPECT_THROW(GenerateTerrain(0, 1, 1, 1, 0.1, rng), Error);
  EXPECT_THROW(GenerateTerrain(10, -1, 1, 1, 0.1, rng), Error);
  EXPECT_THROW(GenerateTerrain(std::nan(""), 1, 1, 1, 0.1, rng), Error);
  EXPECT_THROW(GenerateTerrain(10, 1, 1, 0, 0.1, rng), Error);
}

TEST(SampleHeightTest, NodesReturnStoredValues) {
  Rng rng = DeriveRng(11, "terrain", 0);
  const Terrain t = GenerateTerrain(20, 2, 3, 3, 0.1, rng);
  for (int r = 0; r < t.rows(); ++r) {
    for (int c = 0; c < t.cols(); ++c) EXPECT_EQ(SampleHeight(t, c * 2.0, r * 2.0), t.At(c, r));
  }
}

TEST(SampleHeightTest, FlatFieldIsConstant) {
  const Terrain t = Terrain::Flat(10, 1, 3.0);
  EXPECT_EQ(SampleHeight(t, 0.37, 8.91), 3.0);
  EXPECT_EQ(SampleHeight(t, 10.0, 10.0), 3.0);
}

TEST(SampleHeightTest, CellCenterAveragesCorners) {
  const Terrain t(2, 2, 1.0, {0.0, 0.0, 0.0, 4.0});
  EXPECT_DOUBLE_EQ(SampleHeight(t, 0.5, 0.5), 1.0);
}

TEST(SampleHeightTest, OutsideExtentThrows) {
  const Terrain t = Terrain::Flat(10, 1, 0.0);
  EXPECT_THROW(SampleHeight(t, -0.1, 5), Error);
  EXPECT_THROW(SampleHeight(t, 5, 10.01), Error);
}

TEST(TerrainMeshTest, TwoTrianglesPerCell) {
  const Terrain t = Terrain::Flat(4, 1, 2.0);
  const TerrainMesh m = BuildTerrainMesh(t);
  EXPECT_EQ(m.vertices.size(), 25u);
  EXPECT_EQ(m.triangles.size(), 32u);
  for (const auto& tri : m.triangles) {
    // Upward-facing.
    const Vec3 n = Cross(m.vertices[tri[1]] - m.vertices[tri[0]], m.vertices[tri[2]] - m.vertices[tri[0]]);
    EXPECT_GT(n.z, 0.0);
  }
}

}  // namespace
}  // namespace vforest
