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

#include "vforest/placement.h"

#include <array>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vforest/error.h"
#include "vforest/rng.h"
#include "vforest/terrain.h"

namespace vforest {
namespace {

std::array<double, kSpeciesCount> Uniform() {
  std::array<double, kSpeciesCount> w;
  w.fill(1.0);
  return w;
}

TEST(PlacementTest, ZeroDensityIsEmpty) {
  const Terrain t = Terrain::Flat(100, 1, 0);
  Rng rng = DeriveRng(42, "placement", 0);
  const PlacementResult r = PlaceTrees(t, 0.0, 1.0, Uniform(), rng);
  EXPECT_TRUE(r.trees.empty());
  EXPECT_EQ(r.accepted, 0);
}

TEST(PlacementTest, OneHectareAtHundredPerHectare) {
  const Terrain t = Terrain::Flat(100, 1, 0);
  Rng rng = DeriveRng(42, "placement", 0);
  const PlacementResult r = PlaceTrees(t, 100.0, 0.5, Uniform(), rng);
  ASSERT_EQ(r.trees.size(), 100u);
  EXPECT_EQ(r.accepted, 100);
  EXPECT_GE(r.attempted, 100);
  EXPECT_GE(oracle::MinPairwiseDistance(r.trees), 0.5);
}

TEST(PlacementTest, SpacingBeyondDiagonalAllowsOneTree) {
  const Terrain t = Terrain::Flat(10, 1, 0);
  Rng rng = DeriveRng(1, "placement", 0);
  const PlacementResult r = PlaceTrees(t, 50000.0, 15.0, Uniform(), rng);
  EXPECT_LE(r.trees.size(), 1u);
  EXPECT_LE(r.accepted, r.attempted);
}

TEST(PlacementTest, TreeFieldsFollowContract) {
  Rng trng = DeriveRng(9, "terrain", 0);
  const Terrain t = GenerateTerrain(60, 1, 3, 3, 0.04, trng);
  Rng rng = DeriveRng(9, "placement", 0);
  const PlacementResult r = PlaceTrees(t, 300.0, 2.0, Uniform(), rng);
  ASSERT_FALSE(r.trees.empty());
  EXPECT_GE(oracle::MinPairwiseDistance(r.trees), 2.0);
  for (std::size_t i = 0; i < r.trees.size(); ++i) {
    const TreeInstance& tree = r.trees[i];
    EXPECT_EQ(tree.instance_id, i + 1);
    EXPECT_GE(tree.yaw_rad, 0.0);
    EXPECT_LT(tree.yaw_rad, 2 * kPi);
    EXPECT_GE(tree.scale, 0.8);
    EXPECT_LE(tree.scale, 1.2);
    EXPECT_EQ(tree.base_elevation_m, SampleHeight(t, tree.position_xy_m.x, tree.position_xy_m.y));
  }
}

TEST(PlacementTest, Deterministic) {
  const Terrain t = Terrain::Flat(50, 1, 0);
  Rng a = DeriveRng(5, "placement", 0);
  Rng b = DeriveRng(5, "placement", 0);
  const PlacementResult ra = PlaceTrees(t, 200.0, 1.0, Uniform(), a);
  const PlacementResult rb = PlaceTrees(t, 200.0, 1.0, Uniform(), b);
  ASSERT_EQ(ra.trees.size(), rb.trees.size());
  for (std::size_t i = 0; i < ra.trees.size(); ++i) {
    EXPECT_EQ(ra.trees[i].position_xy_m.x, rb.trees[i].position_xy_m.x);
    EXPECT_EQ(ra.trees[i].seed, rb.trees[i].seed);
  }
}

TEST(SampleSpeciesTest, OneHotAlwaysPicksThatIndex) {
  std::array<double, kSpeciesCount> w{};
  w[3] = 2.5;
  Rng rng = DeriveRng(1, "species", 0);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(SampleSpecies(w, rng), 3);
}

TEST(SampleSpeciesTest, AllZeroWeightsThrow) {
  std::array<double, kSpeciesCount> w{};
  Rng rng = DeriveRng(1, "species", 0);
  EXPECT_THROW(SampleSpecies(w, rng), Error);
}

TEST(SampleSpeciesTest, UniformFrequenciesWithinHalfPoint) {
  Rng rng = DeriveRng(42, "species", 0);
  const auto w = Uniform();
  std::vector<int> counts(kSpeciesCount, 0);
  constexpr int kDraws = 1000000;
  for (int i = 0; i < kDraws; ++i) ++counts[static_cast<std::size_t>(SampleSpecies(w, rng))];
  for (int c : counts) EXPECT_NEAR(static_cast<double>(c) / kDraws, 1.0 / kSpeciesCount, 0.005);
}

TEST(SampleSpeciesTest, WeightsSetProportions) {
  std::array<double, kSpeciesCount> w{};
  w[0] = 1.0;
  w[1] = 3.0;
  Rng rng = DeriveRng(4, "species", 0);
  int ones = 0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) ones += SampleSpecies(w, rng) == 1;
  EXPECT_NEAR(static_cast<double>(ones) / kDraws, 0.75, 0.005);
}

}  // namespace
}  // namespace vforest
