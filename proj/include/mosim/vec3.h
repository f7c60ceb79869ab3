// Copyright 2026 The MoSim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOSIM_VEC3_H_
#define MOSIM_VEC3_H_

#include <cmath>

namespace mosim {

// Three-component vector in scene coordinates (meters, y-up, right-handed).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x, double y, double z) : x(x), y(y), z(z) {}

  constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 &operator+=(const Vec3 &o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  constexpr bool operator==(const Vec3 &o) const = default;

  constexpr double Dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
  double Norm() const { return std::sqrt(Dot(*this)); }

  // Projection onto the horizontal (x, z) plane.
  constexpr Vec3 Horizontal() const { return {x, 0.0, z}; }
};

inline constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }

inline double Distance(const Vec3 &a, const Vec3 &b) { return (a - b).Norm(); }

}  // namespace mosim

#endif  // MOSIM_VEC3_H_
