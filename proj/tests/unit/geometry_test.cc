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

#include "vforest/geometry.h"

#include <cmath>

#include "gtest/gtest.h"
#include "vforest/rng.h"

namespace vforest {
namespace {

constexpr double kEps = 1e-12;

void ExpectVecNear(const Vec3& a, const Vec3& b, double eps) {
  EXPECT_NEAR(a.x, b.x, eps);
  EXPECT_NEAR(a.y, b.y, eps);
  EXPECT_NEAR(a.z, b.z, eps);
}

TEST(QuaternionTest, AxisAngleRotatesVector) {
  const Quaternion q = Quaternion::FromAxisAngle({0, 0, 1}, kPi / 2);
  ExpectVecNear(q.Rotate({1, 0, 0}), {0, 1, 0}, kEps);
  ExpectVecNear(q.Conjugate().Rotate({0, 1, 0}), {1, 0, 0}, kEps);
}

TEST(QuaternionTest, FromBasisRecoversRandomRotations) {
  Rng rng = DeriveRng(5, "quat", 0);
  for (int i = 0; i < 200; ++i) {
    const Vec3 axis = Normalized(Vec3{rng.Uniform(-1, 1), rng.Uniform(-1, 1), rng.Uniform(-1, 1)});
    const Quaternion q = Quaternion::FromAxisAngle(axis, rng.Uniform(-kPi, kPi));
    const Quaternion r = Quaternion::FromBasis(q.Rotate({1, 0, 0}), q.Rotate({0, 1, 0}), q.Rotate({0, 0, 1}));
    EXPECT_NEAR(std::abs(Dot(q, r)), 1.0, 1e-12);
    EXPECT_GE(r.w, 0.0);
  }
}

TEST(QuaternionTest, MatrixMatchesRotate) {
  const Quaternion q = Quaternion::FromAxisAngle(Normalized(Vec3{1, 2, 3}), 0.7);
  const auto m = q.ToMatrix();
  const Vec3 p{0.3, -1.2, 2.5};
  const Vec3 mp{m[0] * p.x + m[1] * p.y + m[2] * p.z, m[3] * p.x + m[4] * p.y + m[5] * p.z,
                m[6] * p.x + m[7] * p.y + m[8] * p.z};
  ExpectVecNear(mp, q.Rotate(p), kEps);
}

TEST(SlerpTest, EndpointsAndShortestArc) {
  const Quaternion a = Quaternion::FromAxisAngle({0, 0, 1}, 0.2);
  const Quaternion b = Quaternion::FromAxisAngle({0, 0, 1}, 1.4);
  EXPECT_NEAR(std::abs(Dot(Slerp(a, b, 0.0), a)), 1.0, kEps);
  EXPECT_NEAR(std::abs(Dot(Slerp(a, b, 1.0), b)), 1.0, kEps);
  // -b is the same rotation; the path must still be the short one.
  const Quaternion neg_b{-b.w, -b.x, -b.y, -b.z};
  EXPECT_NEAR(AngularDistance(Slerp(a, neg_b, 0.5), Quaternion::FromAxisAngle({0, 0, 1}, 0.8)), 0.0, 1e-9);
}

TEST(SlerpTest, NearlyParallelInputsStayUnit) {
  const Quaternion a = Quaternion::FromAxisAngle({0, 1, 0}, 0.3);
  const Quaternion b = Quaternion::FromAxisAngle({0, 1, 0}, 0.3 + 1e-12);
  const Quaternion m = Slerp(a, b, 0.5);
  EXPECT_NEAR(std::sqrt(Dot(m, m)), 1.0, 1e-15);
}

TEST(AabbTest, ExtendAndContain) {
  Aabb a;
  EXPECT_TRUE(a.Empty());
  a.Extend(Vec3{0, 0, 0});
  a.Extend(Vec3{1, 2, 3});
  Aabb b;
  b.Extend(Vec3{0.5, 0.5, 0.5});
  EXPECT_TRUE(a.Contains(b));
  EXPECT_FALSE(b.Contains(a));
  EXPECT_DOUBLE_EQ(a.SurfaceArea(), 2.0 * (2 + 6 + 3));
}

}  // namespace
}  // namespace vforest
