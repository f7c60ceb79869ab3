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

#ifndef MOSIM_KINEMATICS_H_
#define MOSIM_KINEMATICS_H_

#include <string>
#include <string_view>
#include <vector>

#include "mosim/config.h"
#include "mosim/lexicon.h"
#include "mosim/vec3.h"

namespace mosim {

// A rigid body instantiated from a noun entry.
struct Body {
  std::string id;
  std::string noun;
  Shape shape = Shape::kSphere;
  double radius = 0.0;  // spheres
  Vec3 half_extents;    // boxes: (depth, height, width) / 2 along (x, y, z)
  Axis normal = Axis::kY;  // planes
  bool mobile = false;
  double cruise_altitude = 0.0;  // center height held while flying

  Vec3 position;         // center (spheres), centroid (boxes), any point (planes)
  double rotation = 0.0;  // accumulated angle about up x heading, rad
  Vec3 velocity;          // m/s; the y component is the bounce velocity
  Vec3 heading{1.0, 0.0, 0.0};  // horizontal unit motion direction
  bool floor_contact = false;

  bool operator==(const Body &) const = default;
};

// Creates a body at the origin with the geometry of `noun`.
Body MakeBody(std::string id, const NounEntry &noun);

// Height of the center above the support surface when resting.
double RestHeight(const Body &body);

// Radius about which rolling accumulates rotation (sphere radius, half box
// height).
double RollingRadius(const Body &body);

// Per-step physical parameters carried by every world snapshot.
struct Physics {
  double dt = 1.0 / 60.0;
  double speed = 1.0;
  double contact_eps = 1e-3;
  double gravity = 9.81;
  double restitution = 0.8;

  static Physics From(const SceneConfig &cfg);
  bool operator==(const Physics &) const = default;
};

struct WorldState {
  double time = 0.0;
  std::vector<Body> bodies;  // unique ids
  Physics physics;

  const Body *Find(std::string_view id) const;
  // Throw UnboundObjectError for unknown ids.
  const Body &Get(std::string_view id) const;
  Body &Mutable(std::string_view id);

  // The horizontal support plane (normal +y), if any.
  const Body *Floor() const;

  bool operator==(const WorldState &) const = default;
};

enum class Relation { kEC, kDC, kPO };
std::string_view RelationName(Relation r);

// Signed gap between two surfaces; negative means interpenetration. Throws
// UnsupportedShapePair for plane/plane.
double SurfaceDistance(const Body &a, const Body &b);

// EC iff |d| <= eps, DC iff d > eps, PO iff d < -eps.
Relation ClassifyDistance(double distance, double contact_eps);
Relation ContactRelation(const Body &a, const Body &b, double contact_eps);

// Advances the world by one fixed step of `action` applied to `theme`,
// moving along the horizontal unit vector `dir`. Throws ImmobileThemeError
// and UnboundObjectError.
WorldState Tick(const WorldState &world, Action action, std::string_view theme,
                const Vec3 &dir);

// `stepped` holds the theme after a pending translation from
// `previous_position`. If that translation penetrates `goal`, the theme is
// pulled back along the segment to the first point of contact and its
// horizontal velocity is zeroed; otherwise `stepped` is returned unchanged.
WorldState ResolveGoalContact(const WorldState &stepped, std::string_view theme,
                              std::string_view goal, const Vec3 &previous_position);

}  // namespace mosim

#endif  // MOSIM_KINEMATICS_H_
