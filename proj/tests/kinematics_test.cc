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
#include <limits>

#include "doctest.h"
#include "mosim/errors.h"
#include "mosim/rng.h"

namespace mosim {
namespace {

Body Sphere(const char *id, double r, Vec3 at) {
  NounEntry n;
  n.lemma = id;
  n.shape = Shape::kSphere;
  n.dimensions.radius = r;
  Body b = MakeBody(id, n);
  b.position = at;
  return b;
}

Body Box(const char *id, double w, double h, double d, Vec3 at, bool mobile = false) {
  NounEntry n;
  n.lemma = id;
  n.shape = Shape::kBox;
  n.dimensions.width = w;
  n.dimensions.height = h;
  n.dimensions.depth = d;
  n.mobile = mobile;
  Body b = MakeBody(id, n);
  b.position = at;
  return b;
}

Body Floor() {
  NounEntry n;
  n.lemma = "floor";
  n.shape = Shape::kPlane;
  n.mobile = false;
  return MakeBody("floor", n);
}

// Distance from a point to the surface of a box, by sampling its faces on a
// regular grid. Exact up to half a grid diagonal.
double SampledBoxDistance(const Vec3 &p, const Body &box, int n) {
  const Vec3 &h = box.half_extents;
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](Vec3 q) { best = std::min(best, Distance(p, box.position + q)); };
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double u = -1.0 + 2.0 * i / n;
      const double v = -1.0 + 2.0 * j / n;
      for (double s : {-1.0, 1.0}) {
        consider({s * h.x, u * h.y, v * h.z});
        consider({u * h.x, s * h.y, v * h.z});
        consider({u * h.x, v * h.y, s * h.z});
      }
    }
  }
  return best;
}

TEST_CASE("sphere-box distance agrees with surface sampling") {
  Rng rng(99);
  constexpr int kGrid = 80;
  for (int trial = 0; trial < 200; ++trial) {
    const Body box = Box("box", 0.2 + 2 * rng.UniformUnit(), 0.2 + 2 * rng.UniformUnit(),
                         0.2 + 2 * rng.UniformUnit(), {0.0, 0.0, 0.0});
    const Vec3 c{-3 + 6 * rng.UniformUnit(), -3 + 6 * rng.UniformUnit(),
                 -3 + 6 * rng.UniformUnit()};
    const Vec3 &h = box.half_extents;
    if (std::abs(c.x) < h.x && std::abs(c.y) < h.y && std::abs(c.z) < h.z) continue;
    const double r = 0.1 + 0.4 * rng.UniformUnit();
    const Body ball = Sphere("ball", r, c);
    const double cell = 2.0 * std::max({h.x, h.y, h.z}) / kGrid;
    const double oracle = SampledBoxDistance(c, box, kGrid) - r;
    CAPTURE(trial);
    CHECK(SurfaceDistance(ball, box) <= oracle + 1e-12);
    CHECK(SurfaceDistance(ball, box) >= oracle - cell);
    CHECK(SurfaceDistance(box, ball) == SurfaceDistance(ball, box));
  }
}

TEST_CASE("closed-form distances") {
  const Body a = Sphere("a", 0.5, {0, 0.5, 0});
  const Body b = Sphere("b", 0.25, {3, 0.5, 4});
  CHECK(SurfaceDistance(a, b) == doctest::Approx(5.0 - 0.75));
  CHECK(SurfaceDistance(a, Floor()) == doctest::Approx(0.0));
  CHECK(SurfaceDistance(Floor(), a) == doctest::Approx(0.0));
  const Body wall = Box("wall", 4, 2, 0.2, {5, 1, 0});
  CHECK(SurfaceDistance(a, wall) == doctest::Approx(5 - 0.1 - 0.5));
  CHECK(SurfaceDistance(wall, Floor()) == doctest::Approx(0.0));
  const Body crate = Box("crate", 1, 1, 1, {2, 0.5, 0});
  CHECK(SurfaceDistance(crate, wall) == doctest::Approx(5 - 0.1 - 2 - 0.5));
  CHECK_THROWS_AS(SurfaceDistance(Floor(), Floor()), UnsupportedShapePair);
}

TEST_CASE("relations follow the contact tolerance") {
  CHECK(ClassifyDistance(0.0, 1e-3) == Relation::kEC);
  CHECK(ClassifyDistance(1e-3, 1e-3) == Relation::kEC);
  CHECK(ClassifyDistance(-1e-3, 1e-3) == Relation::kEC);
  CHECK(ClassifyDistance(2e-3, 1e-3) == Relation::kDC);
  CHECK(ClassifyDistance(-2e-3, 1e-3) == Relation::kPO);
}

WorldState BallWorld(Vec3 wall_at = {100, 1, 0}) {
  WorldState w;
  w.bodies = {Sphere("ball", 0.5, {0, 0.5, 0}), Box("wall", 4, 2, 0.2, wall_at), Floor()};
  w.bodies[0].mobile = true;
  return w;
}

TEST_CASE("rolling advances by speed times dt and turns by distance over radius") {
  WorldState w = BallWorld();
  const Vec3 dir{3, 0, 4};
  for (int i = 1; i <= 120; ++i) {
    w = Tick(w, Action::kRoll, "ball", dir);
    const Body &b = w.Get("ball");
    const double d = i * w.physics.speed * w.physics.dt;
    CHECK(b.position.x == doctest::Approx(0.6 * d).epsilon(1e-12));
    CHECK(b.position.z == doctest::Approx(0.8 * d).epsilon(1e-12));
    CHECK(b.position.y == 0.5);
    CHECK(b.rotation == doctest::Approx(d / 0.5).epsilon(1e-12));
    CHECK(b.floor_contact);
  }
  CHECK(w.time == doctest::Approx(2.0));
}

TEST_CASE("sliding and moving never rotate; flying holds altitude") {
  WorldState w = BallWorld();
  for (int i = 0; i < 100; ++i) {
    w = Tick(w, Action::kSlide, "ball", {1, 0, 0});
    w = Tick(w, Action::kMove, "ball", {0, 0, 1});
  }
  CHECK(w.Get("ball").rotation == 0.0);
  CHECK(w.Get("ball").floor_contact);

  WorldState f = BallWorld();
  f.Mutable("ball").position.y = f.Get("ball").cruise_altitude;
  for (int i = 0; i < 100; ++i) {
    f = Tick(f, Action::kFly, "ball", {1, 0, 0});
    CHECK(f.Get("ball").position.y == f.Get("ball").cruise_altitude);
    CHECK_FALSE(f.Get("ball").floor_contact);
  }
}

TEST_CASE("motion into an obstacle stops in contact") {
  WorldState w = BallWorld({1.0, 1, 0});
  for (int i = 0; i < 200; ++i) {
    w = Tick(w, Action::kRoll, "ball", {1, 0, 0});
    const double gap = SurfaceDistance(w.Get("ball"), w.Get("wall"));
    REQUIRE(gap >= 0.0);
  }
  CHECK(SurfaceDistance(w.Get("ball"), w.Get("wall")) <= w.physics.contact_eps);
  CHECK(w.Get("ball").position.x == doctest::Approx(1.0 - 0.1 - 0.5).epsilon(1e-9));
  // Rotation tracks only the distance actually covered.
  CHECK(w.Get("ball").rotation == doctest::Approx(w.Get("ball").position.x / 0.5).epsilon(1e-9));
}

TEST_CASE("bouncing alternates floor contact and keeps the ball above the floor") {
  WorldState w = BallWorld();
  w.Mutable("ball").velocity.y = 1.2;
  int episodes = 0;
  bool prev = true;
  for (int i = 0; i < 120; ++i) {
    w = Tick(w, Action::kBounce, "ball", {1, 0, 0});
    REQUIRE(w.Get("ball").position.y >= 0.5);
    const bool now = w.Get("ball").floor_contact;
    if (now && !prev) ++episodes;
    prev = now;
  }
  CHECK(episodes >= 2);
}

TEST_CASE("rebound speed is restitution times the exact impact speed") {
  WorldState w = BallWorld();
  w.Mutable("ball").position.y = 0.5 + 1.0;
  const double g = w.physics.gravity;
  for (int i = 0; i < 200; ++i) {
    const WorldState n = Tick(w, Action::kBounce, "ball", {1, 0, 0});
    if (n.Get("ball").velocity.y > 0.0 && w.Get("ball").velocity.y <= 0.0) {
      const double impact = std::sqrt(2 * g * 1.0);
      CHECK(n.Get("ball").velocity.y == doctest::Approx(w.physics.restitution * impact));
      return;
    }
    w = n;
  }
  FAIL("no bounce within 200 ticks");
}

TEST_CASE("ticks on immobile or unknown objects fail") {
  const WorldState w = BallWorld();
  CHECK_THROWS_AS(Tick(w, Action::kRoll, "wall", {1, 0, 0}), ImmobileThemeError);
  CHECK_THROWS_AS(Tick(w, Action::kRoll, "kite", {1, 0, 0}), UnboundObjectError);
}

TEST_CASE("box extents map depth, height and width to x, y and z") {
  const Body wall = Box("wall", 4, 2, 0.2, {0, 0, 0});
  CHECK(wall.half_extents == Vec3{0.1, 1.0, 2.0});
  CHECK(RestHeight(wall) == 1.0);
  CHECK(RollingRadius(Sphere("b", 0.3, {})) == 0.3);
}

}  // namespace
}  // namespace mosim
