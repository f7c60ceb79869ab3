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

#include "mosim/kinematics.h"

#include <algorithm>
#include <cmath>

#include "mosim/errors.h"

namespace mosim {

namespace {

Vec3 AxisVector(Axis axis) {
  switch (axis) {
    case Axis::kX:
      return {1, 0, 0};
    case Axis::kY:
      return {0, 1, 0};
    case Axis::kZ:
      return {0, 0, 1};
  }
  return {0, 1, 0};
}

double Component(const Vec3 &v, int i) { return i == 0 ? v.x : (i == 1 ? v.y : v.z); }

// Distance from a plane to the nearest point of `b` along the plane normal.
double PlaneDistance(const Body &plane, const Body &b) {
  const Vec3 n = AxisVector(plane.normal);
  const double offset = (b.position - plane.position).Dot(n);
  switch (b.shape) {
    case Shape::kSphere:
      return offset - b.radius;
    case Shape::kBox:
      return offset - std::abs(b.half_extents.Dot(n));
    case Shape::kPlane:
      break;
  }
  throw UnsupportedShapePair("plane/plane");
}

double SphereBoxDistance(const Body &sphere, const Body &box) {
  const Vec3 q = sphere.position - box.position;
  const Vec3 &h = box.half_extents;
  const Vec3 outside{std::max(std::abs(q.x) - h.x, 0.0), std::max(std::abs(q.y) - h.y, 0.0),
                     std::max(std::abs(q.z) - h.z, 0.0)};
  const double out = outside.Norm();
  if (out > 0.0) return out - sphere.radius;
  // Center inside the box: depth to the nearest face.
  const double depth = std::min({h.x - std::abs(q.x), h.y - std::abs(q.y), h.z - std::abs(q.z)});
  return -depth - sphere.radius;
}

double BoxBoxDistance(const Body &a, const Body &b) {
  const Vec3 d = a.position - b.position;
  double gaps[3];
  for (int i = 0; i < 3; ++i) {
    gaps[i] = std::abs(Component(d, i)) -
              (Component(a.half_extents, i) + Component(b.half_extents, i));
  }
  if (gaps[0] <= 0.0 && gaps[1] <= 0.0 && gaps[2] <= 0.0) {
    return std::max({gaps[0], gaps[1], gaps[2]});
  }
  double sum = 0.0;
  for (double g : gaps) sum += g > 0.0 ? g * g : 0.0;
  return std::sqrt(sum);
}

void ClampToSupport(const WorldState &world, Body &body) {
  const Body *floor = world.Floor();
  const double base = floor != nullptr ? floor->position.y : 0.0;
  body.position.y = base + RestHeight(body);
}

Vec3 HorizontalUnit(const Vec3 &dir) {
  const Vec3 h = dir.Horizontal();
  const double n = h.Norm();
  return n > 0.0 ? h * (1.0 / n) : Vec3{};
}

}  // namespace

Body MakeBody(std::string id, const NounEntry &noun) {
  Body body;
  body.id = std::move(id);
  body.noun = noun.lemma;
  body.shape = noun.shape;
  body.mobile = noun.mobile;
  switch (noun.shape) {
    case Shape::kSphere:
      body.radius = noun.dimensions.radius;
      break;
    case Shape::kBox:
      body.half_extents = Vec3{noun.dimensions.depth, noun.dimensions.height,
                               noun.dimensions.width} * 0.5;
      break;
    case Shape::kPlane:
      body.normal = noun.dimensions.normal;
      break;
  }
  // Objects without a declared altitude fly one meter clear of the floor.
  body.cruise_altitude =
      noun.default_altitude > 0.0 ? noun.default_altitude : RestHeight(body) + 1.0;
  return body;
}

double RestHeight(const Body &body) {
  switch (body.shape) {
    case Shape::kSphere:
      return body.radius;
    case Shape::kBox:
      return body.half_extents.y;
    case Shape::kPlane:
      return 0.0;
  }
  return 0.0;
}

double RollingRadius(const Body &body) { return RestHeight(body); }

Physics Physics::From(const SceneConfig &cfg) {
  return Physics{cfg.dt, cfg.speed, cfg.contact_eps, cfg.gravity, cfg.restitution};
}

const Body *WorldState::Find(std::string_view id) const {
  for (const Body &b : bodies) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

const Body &WorldState::Get(std::string_view id) const {
  if (const Body *b = Find(id)) return *b;
  throw UnboundObjectError(std::string(id));
}

Body &WorldState::Mutable(std::string_view id) {
  for (Body &b : bodies) {
    if (b.id == id) return b;
  }
  throw UnboundObjectError(std::string(id));
}

const Body *WorldState::Floor() const {
  for (const Body &b : bodies) {
    if (b.shape == Shape::kPlane && b.normal == Axis::kY) return &b;
  }
  return nullptr;
}

std::string_view RelationName(Relation r) {
  switch (r) {
    case Relation::kEC:
      return "EC";
    case Relation::kDC:
      return "DC";
    case Relation::kPO:
      return "PO";
  }
  return "?";
}

double SurfaceDistance(const Body &a, const Body &b) {
  if (a.shape == Shape::kPlane) return PlaneDistance(a, b);
  if (b.shape == Shape::kPlane) return PlaneDistance(b, a);
  if (a.shape == Shape::kSphere && b.shape == Shape::kSphere) {
    return Distance(a.position, b.position) - a.radius - b.radius;
  }
  if (a.shape == Shape::kSphere) return SphereBoxDistance(a, b);
  if (b.shape == Shape::kSphere) return SphereBoxDistance(b, a);
  return BoxBoxDistance(a, b);
}

Relation ClassifyDistance(double distance, double contact_eps) {
  if (std::abs(distance) <= contact_eps) return Relation::kEC;
  return distance > contact_eps ? Relation::kDC : Relation::kPO;
}

Relation ContactRelation(const Body &a, const Body &b, double contact_eps) {
  return ClassifyDistance(SurfaceDistance(a, b), contact_eps);
}

WorldState ResolveGoalContact(const WorldState &stepped, std::string_view theme,
                              std::string_view goal, const Vec3 &previous_position) {
  const Body &obstacle = stepped.Get(goal);
  Body moved = stepped.Get(theme);
  if (SurfaceDistance(moved, obstacle) >= 0.0) return stepped;

  const Vec3 target = moved.position;
  auto gap_at = [&](double t) {
    moved.position = previous_position + (target - previous_position) * t;
    return SurfaceDistance(moved, obstacle);
  };
  // The gap is convex along the segment, so the contact point is the unique
  // downward crossing between the start (clear) and the end (penetrating).
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 100 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gap_at(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  gap_at(lo);
  moved.velocity.x = 0.0;
  moved.velocity.z = 0.0;

  WorldState out = stepped;
  out.Mutable(theme) = moved;
  return out;
}

WorldState Tick(const WorldState &world, Action action, std::string_view theme,
                const Vec3 &dir) {
  const Body &before = world.Get(theme);
  if (!before.mobile) throw ImmobileThemeError(before.id);
  const Physics &ph = world.physics;
  const Vec3 heading = HorizontalUnit(dir);
  const Vec3 step = heading * (ph.speed * ph.dt);

  WorldState next = world;
  next.time = world.time + ph.dt;
  Body &body = next.Mutable(theme);
  body.position += step;
  switch (action) {
    case Action::kRoll:
    case Action::kSlide:
    case Action::kMove:
      ClampToSupport(world, body);
      body.velocity.y = 0.0;
      break;
    case Action::kFly:
      body.position.y = body.cruise_altitude;
      body.velocity.y = 0.0;
      break;
    case Action::kBounce: {
      // Exact ballistic flight within the step. A step that would cross the
      // floor ends on the floor with the rebound velocity computed from the
      // exact impact speed, so every impact is sampled as a contact state.
      const Body *floor = world.Floor();
      const double rest = (floor != nullptr ? floor->position.y : 0.0) + RestHeight(body);
      const double y0 = before.position.y;
      const double v0 = before.velocity.y;
      const double y1 = y0 + v0 * ph.dt - 0.5 * ph.gravity * ph.dt * ph.dt;
      if (y1 < rest) {
        const double impact = std::sqrt(v0 * v0 + 2.0 * ph.gravity * std::max(y0 - rest, 0.0));
        body.position.y = rest;
        body.velocity.y = ph.restitution * impact;
      } else {
        body.position.y = y1;
        body.velocity.y = v0 - ph.gravity * ph.dt;
      }
      break;
    }
  }
  body.velocity.x = step.x / ph.dt;
  body.velocity.z = step.z / ph.dt;
  if (heading.Norm() > 0.0) body.heading = heading;

  for (const Body &other : world.bodies) {
    if (other.id == before.id || other.shape == Shape::kPlane) continue;
    next = ResolveGoalContact(next, theme, other.id, before.position);
  }

  Body &after = next.Mutable(theme);
  const double travelled = (after.position - before.position).Horizontal().Norm();
  if (action == Action::kRoll) {
    const double r = RollingRadius(after);
    if (r > 0.0) after.rotation += travelled / r;
  }
  if (const Body *floor = next.Floor()) {
    after.floor_contact = ContactRelation(after, *floor, ph.contact_eps) == Relation::kEC;
  }
  return next;
}

}  // namespace mosim
