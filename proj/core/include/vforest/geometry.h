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

#ifndef VFOREST_GEOMETRY_H_
#define VFOREST_GEOMETRY_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace vforest {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline double Distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 operator*(double s, const Vec3& a) { return a * s; }
inline Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) { a = a + b; return a; }

inline double Dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 Cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double Norm(const Vec3& a) { return std::sqrt(Dot(a, a)); }
inline Vec3 Normalized(const Vec3& a) { return a / Norm(a); }
inline Vec3 Hadamard(const Vec3& a, const Vec3& b) { return {a.x * b.x, a.y * b.y, a.z * b.z}; }

inline Vec3 Min(const Vec3& a, const Vec3& b) {
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
}
inline Vec3 Max(const Vec3& a, const Vec3& b) {
  return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}

inline bool IsFinite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Linear RGB, nominally in [0,1] per channel.
using Rgb = Vec3;

// Unit quaternion, Hamilton convention, (w, x, y, z).
struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quaternion Identity() { return {}; }
  static Quaternion FromAxisAngle(const Vec3& axis, double angle_rad);
  // Rotation whose columns are the given orthonormal basis vectors.
  static Quaternion FromBasis(const Vec3& col_x, const Vec3& col_y, const Vec3& col_z);

  double Norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  Quaternion Normalized() const;
  Quaternion Conjugate() const { return {w, -x, -y, -z}; }
  Vec3 Rotate(const Vec3& v) const;
  // Row-major 3x3 rotation matrix.
  std::array<double, 9> ToMatrix() const;
};

Quaternion operator*(const Quaternion& a, const Quaternion& b);
double Dot(const Quaternion& a, const Quaternion& b);

// Shortest-arc spherical linear interpolation.
Quaternion Slerp(const Quaternion& a, const Quaternion& b, double t);

// Angle of the rotation taking a to b, in [0, pi].
double AngularDistance(const Quaternion& a, const Quaternion& b);

struct Aabb {
  Vec3 min{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity()};
  Vec3 max{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};

  bool Empty() const { return min.x > max.x || min.y > max.y || min.z > max.z; }
  void Extend(const Vec3& p) {
    min = Min(min, p);
    max = Max(max, p);
  }
  void Extend(const Aabb& b) {
    min = Min(min, b.min);
    max = Max(max, b.max);
  }
  bool Contains(const Aabb& b) const {
    return min.x <= b.min.x && min.y <= b.min.y && min.z <= b.min.z && max.x >= b.max.x &&
           max.y >= b.max.y && max.z >= b.max.z;
  }
  Vec3 Center() const { return (min + max) * 0.5; }
  Vec3 Extent() const { return max - min; }
  double SurfaceArea() const {
    if (Empty()) return 0.0;
    const Vec3 e = Extent();
    return 2.0 * (e.x * e.y + e.y * e.z + e.z * e.x);
  }
};

struct Ray {
  Vec3 origin;
  Vec3 direction;  // unit length
};

}  // namespace vforest

#endif  // VFOREST_GEOMETRY_H_
