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

#include "vforest/rng.h"

#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace vforest {
namespace {

TEST(RngTest, SameKeyGivesSameStream) {
  Rng a = DeriveRng(42, "placement", 0);
  Rng b = DeriveRng(42, "placement", 0);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.NextU64(), b.NextU64()) << "draw " << i;
}

TEST(RngTest, IndexSeparatesStreams) {
  EXPECT_NE(DeriveRng(42, "placement", 0).NextU64(), DeriveRng(42, "placement", 1).NextU64());
  EXPECT_NE(DeriveRng(42, "placement", 0).NextU64(), DeriveRng(42, "terrain", 0).NextU64());
  EXPECT_NE(DeriveRng(42, "placement", 0).NextU64(), DeriveRng(43, "placement", 0).NextU64());
}

TEST(RngTest, GoldenFirstDraw) {
  EXPECT_EQ(DeriveRng(42, "frame", 7).NextU64(), 12947711751574865411ULL);
}

TEST(RngTest, StreamIsRandomAccess) {
  Rng a = DeriveRng(9, "x", 3);
  std::vector<std::uint64_t> first;
  for (int i = 0; i < 10; ++i) first.push_back(a.NextU64());
  Rng b(a.key(), 5);
  EXPECT_EQ(b.NextU64(), first[5]);
}

TEST(RngTest, UniformIndexStaysInRange) {
  Rng rng = DeriveRng(1, "index", 0);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t v = rng.UniformIndex(7);
    ASSERT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.Uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RngTest, UniformIntBounds) {
  Rng rng = DeriveRng(2, "int", 0);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.UniformInt(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
  }
  EXPECT_EQ(rng.UniformInt(5, 5), 5);
}

}  // namespace
}  // namespace vforest
