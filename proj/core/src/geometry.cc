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

namespace vforest {

Quaternion Quaternion::FromAxisAngle(const Vec3& axis, double angle_rad) {
  const Vec3 u = vforest::Normalized(axis);
  const double s = std::sin(0.5 * angle_rad);
  return {std::cos(0.5 * angle_rad), u.x * s, u.y * s, u.z * s};
}

Quaternion Quaternion::FromBasis(const Vec3& cx, const Vec3& cy, const Vec3& cz) {
  // Shepperd's method on the matrix [cx cy cz].
  const double m00 = cx.x, m01 = cy.x, m02 = cz.x;
  const double m10 = cx.y, m11 = cy.y, m12 = cz.y;
  const double m20 = cx.z, m21 = cy.z, m22 = cz.z;
  const double trace = m00 + m11 + m22;
  Quaternion q;
  if (trace > 0.0) {
    const double s = 2.0 * std::sqrt(trace + 1.0);
    q = {0.25 * s, (m21 - m12) / s, (m02 - m20) / s, (m10 - m01) / s};
  } else if (m00 > m11 && m00 > m22) {
    const double s = 2.0 * std::sqrt(1.0 + m00 - m11 - m22);
    q = {(m21 - m12) / s, 0.25 * s, (m01 + m10) / s, (m02 + m20) / s};
  } else if (m11 > m22) {
    const double s = 2.0 * std::sqrt(1.0 + m11 - m00 - m22);
    q = {(m02 - m20) / s, (m01 + m10) / s, 0.25 * s, (m12 + m21) / s};
  } else {
    const double s = 2.0 * std::sqrt(1.0 + m22 - m00 - m11);
    q = {(m10 - m01) / s, (m02 + m20) / s, (m12 + m21) / s, 0.25 * s};
  }
  if (q.w < 0.0) q = {-q.w, -q.x, -q.y, -q.z};
  return q.Normalized();
}

Quaternion Quaternion::Normalized() const {
  const double n = Norm();
  return {w / n, x / n, y / n, z / n};
}

Vec3 Quaternion::Rotate(const Vec3& v) const {
  // v' = v + 2w(u x v) + 2u x (u x v)
  const Vec3 u{x, y, z};
  const Vec3 t = Cross(u, v) * 2.0;
  return v + t * w + Cross(u, t);
}

std::array<double, 9> Quaternion::ToMatrix() const {
  return {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
          2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
          2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

double Dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

Quaternion Slerp(const Quaternion& a, const Quaternion& b_in, double t) {
  Quaternion b = b_in;
  double cos_theta = Dot(a, b);
  if (cos_theta < 0.0) {
    b = {-b.w, -b.x, -b.y, -b.z};
    cos_theta = -cos_theta;
  }
  double wa;
  double wb;
  if (cos_theta > 1.0 - 1e-12) {
    // Nearly parallel: fall back to normalized lerp.
    wa = 1.0 - t;
    wb = t;
  } else {
    const double theta = std::acos(std::min(1.0, cos_theta));
    const double sin_theta = std::sin(theta);
    wa = std::sin((1.0 - t) * theta) / sin_theta;
    wb = std::sin(t * theta) / sin_theta;
  }
  return Quaternion{wa * a.w + wb * b.w, wa * a.x + wb * b.x, wa * a.y + wb * b.y,
                    wa * a.z + wb * b.z}
      .Normalized();
}

double AngularDistance(const Quaternion& a, const Quaternion& b) {
  const double d = std::min(1.0, std::abs(Dot(a, b)));
  return 2.0 * std::acos(d);
}

}  // namespace vforest
