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

#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vforest/rng.h"

namespace vforest {
namespace {

Vec3 RandomPoint(Rng& rng, double lo, double hi) { return {rng.Uniform(lo, hi), rng.Uniform(lo, hi), rng.Uniform(lo, hi)}; }

Vec3 RandomDirection(Rng& rng) {
  for (;;) {
    const Vec3 d = RandomPoint(rng, -1, 1);
    const double n = Norm(d);
    if (n > 1e-3 && n <= 1.0) return d / n;
  }
}

std::vector<Triangle> RandomTriangles(Rng& rng, int count) {
  std::vector<Triangle> tris;
  for (int i = 0; i < count; ++i) {
    const Vec3 c = RandomPoint(rng, -10, 10);
    tris.push_back({c + RandomPoint(rng, -1.5, 1.5), c + RandomPoint(rng, -1.5, 1.5), c + RandomPoint(rng, -1.5, 1.5)});
  }
  return tris;
}

Bvh MakeBvh(const std::vector<Triangle>& tris) {
  return Bvh(tris, std::vector<SurfaceInfo>(tris.size()));
}

TEST(BvhTest, SingleTriangleMatchesDirectTest) {
  const std::vector<Triangle> tris = {{{-1, -1, 5}, {1, -1, 5}, {0, 1, 5}}};
  const Bvh bvh = MakeBvh(tris);
  const Ray ray{{0, 0, 0}, {0, 0, 1}};
  const auto hit = bvh.Intersect(ray);
  ASSERT_TRUE(hit);
  double t, u, v;
  ASSERT_TRUE(IntersectTriangle(ray, tris[0], kRayTMin, 1e300, t, u, v));
  EXPECT_EQ(hit->t, t);
  EXPECT_EQ(hit->triangle, 0u);
  EXPECT_DOUBLE_EQ(hit->t, 5.0);
}

TEST(BvhTest, MissReturnsNothing) {
  const std::vector<Triangle> tris = {{{-1, -1, 5}, {1, -1, 5}, {0, 1, 5}}};
  const Bvh bvh = MakeBvh(tris);
  EXPECT_FALSE(bvh.Intersect({{0, 0, 0}, {0, 0, -1}}));
  EXPECT_FALSE(bvh.Intersect({{5, 5, 0}, {0, 0, 1}}));
  EXPECT_FALSE(bvh.Intersect({{0, 0, 0}, {0, 0, 1}}, 4.0));
  EXPECT_FALSE(Bvh().Intersect({{0, 0, 0}, {0, 0, 1}}));
}

TEST(BvhTest, MatchesBruteForceOnRandomSoup) {
  Rng rng = DeriveRng(17, "bvh", 0);
  const std::vector<Triangle> tris = RandomTriangles(rng, 1000);
  const Bvh bvh = MakeBvh(tris);
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const Ray ray{RandomPoint(rng, -15, 15), RandomDirection(rng)};
    const auto expected = oracle::BruteForceIntersect(tris, ray);
    const auto got = bvh.Intersect(ray);
    ASSERT_EQ(expected.has_value(), got.has_value()) << "ray " << i;
    if (!expected) continue;
    ++hits;
    ASSERT_EQ(expected->triangle, got->triangle) << "ray " << i;
    ASSERT_EQ(expected->t, got->t) << "ray " << i;
  }
  EXPECT_GT(hits, 1000);
}

TEST(BvhTest, OccludedAgreesWithBruteForce) {
  Rng rng = DeriveRng(18, "bvh", 0);
  const std::vector<Triangle> tris = RandomTriangles(rng, 300);
  const Bvh bvh = MakeBvh(tris);
  for (int i = 0; i < 2000; ++i) {
    const Ray ray{RandomPoint(rng, -12, 12), RandomDirection(rng)};
    const double t_max = rng.Uniform(0.5, 20.0);
    EXPECT_EQ(bvh.Occluded(ray, t_max), oracle::BruteForceIntersect(tris, ray, t_max).has_value());
  }
}

TEST(BvhTest, CoincidentTrianglesResolveToLowerIndex) {
  const Triangle t{{-1, -1, 3}, {1, -1, 3}, {0, 1, 3}};
  const std::vector<Triangle> tris = {{{5, 5, 9}, {6, 5, 9}, {5, 6, 9}}, t, t, t};
  const Bvh bvh = MakeBvh(tris);
  const auto hit = bvh.Intersect({{0, 0, 0}, {0, 0, 1}});
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->triangle, 1u);
}

}  // namespace
}  // namespace vforest
