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

#include "mosim/scene.h"

#include <cmath>
#include <numbers>

#include "mosim/errors.h"

namespace mosim {

namespace {

NounEntry FloorEntry(const Lexicon &lex) {
  if (const NounEntry *n = lex.FindNoun(kFloorId); n != nullptr && n->shape == Shape::kPlane) {
    return *n;
  }
  NounEntry floor;
  floor.lemma = kFloorId;
  floor.shape = Shape::kPlane;
  floor.dimensions.normal = Axis::kY;
  floor.mobile = false;
  return floor;
}

// Moves `theme` along +x from well clear of `ground` until the two touch.
// The gap is monotone in x on the near side, so bisection finds the contact.
void PlaceAgainst(Body &theme, const Body &ground) {
  const double reach = 2.0 * (ground.radius + ground.half_extents.Norm() + theme.radius +
                              theme.half_extents.Norm()) + 1.0;
  double lo = ground.position.x - reach;  // clear
  double hi = ground.position.x;          // overlapping, when contact is possible
  theme.position.x = hi;
  if (SurfaceDistance(theme, ground) >= 0.0) {
    // The theme passes by the ground without touching; leave it clear.
    theme.position.x = lo;
    return;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    theme.position.x = mid;
    if (SurfaceDistance(theme, ground) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  theme.position.x = lo;
}

}  // namespace

ResolvedParams SampleUnderspecified(const SceneConfig &cfg, Rng &rng) {
  ResolvedParams p;
  p.bare_frames = static_cast<int>(rng.UniformInt(cfg.min_bare_frames, cfg.max_bare_frames));
  p.direction_angle = 2.0 * std::numbers::pi * rng.UniformUnit();
  return p;
}

ResolvedParams ResolveForSeed(const SceneConfig &cfg) {
  Rng rng = Rng::ForStream(cfg.seed, Stream::kUnderspecified);
  return SampleUnderspecified(cfg, rng);
}

Scene BuildScene(const EventFrame &frame, const Lexicon &lex, const SceneConfig &cfg) {
  ValidateConfig(cfg);
  ValidateFrame(frame, lex);
  const VerbEntry &verb = *lex.FindVerb(frame.verb);
  const NounEntry &theme_noun = lex.LookupNoun(frame.theme);
  if (!theme_noun.mobile) throw ImmobileThemeError(theme_noun.lemma);

  Scene scene;
  scene.theme = frame.ThemeId();
  WorldState &world = scene.initial;
  world.time = 0.0;
  world.physics = Physics::From(cfg);

  Body floor = MakeBody(kFloorId, FloorEntry(lex));
  Body theme = MakeBody(scene.theme, theme_noun);
  theme.position = {0.0, 0.0, 0.0};
  theme.position.y =
      verb.tick_action == Action::kFly ? theme.cruise_altitude : RestHeight(theme);
  if (verb.tick_action == Action::kBounce) theme.velocity.y = cfg.bounce_speed;

  std::optional<Body> ground;
  if (frame.path) {
    const NounEntry &ground_noun = lex.LookupNoun(frame.path->ground);
    if (ground_noun.shape == Shape::kPlane) {
      scene.ground = std::string(kFloorId);
    } else {
      ground = MakeBody(*frame.GroundId(), ground_noun);
      ground->position = {cfg.ground_distance, RestHeight(*ground), 0.0};
      scene.ground = ground->id;
    }
    if (frame.path->prep == Prep::kFrom) {
      scene.direction = {-1.0, 0.0, 0.0};
      if (ground) PlaceAgainst(theme, *ground);
    } else {
      scene.direction = {1.0, 0.0, 0.0};
    }
  } else {
    const double angle = ResolveForSeed(cfg).direction_angle;
    scene.direction = {std::cos(angle), 0.0, std::sin(angle)};
  }
  theme.heading = scene.direction;
  theme.floor_contact = ContactRelation(theme, floor, cfg.contact_eps) == Relation::kEC;

  world.bodies.push_back(std::move(theme));
  if (ground) world.bodies.push_back(std::move(*ground));
  world.bodies.push_back(std::move(floor));

  if (auto bad = CheckScene(scene)) throw ConfigError("scene invariant violated: " + *bad);
  return scene;
}

std::optional<std::string> CheckScene(const Scene &scene) {
  const WorldState &w = scene.initial;
  const Body *theme = w.Find(scene.theme);
  if (theme == nullptr) return "theme '" + scene.theme + "' missing";
  if (!theme->mobile) return "theme '" + scene.theme + "' is immobile";
  if (w.Floor() == nullptr) return std::string("floor missing");
  if (scene.ground && w.Find(*scene.ground) == nullptr) return "ground missing";
  const double eps = w.physics.contact_eps;
  if (theme->floor_contact && theme->shape == Shape::kSphere &&
      std::abs(theme->position.y - w.Floor()->position.y - theme->radius) > eps) {
    return std::string("floor contact flag set on a sphere not resting on the floor");
  }
  for (size_t i = 0; i < w.bodies.size(); ++i) {
    for (size_t j = i + 1; j < w.bodies.size(); ++j) {
      const Body &a = w.bodies[i];
      const Body &b = w.bodies[j];
      if (a.shape == Shape::kPlane && b.shape == Shape::kPlane) continue;
      if (SurfaceDistance(a, b) < -eps) return a.id + " and " + b.id + " interpenetrate";
    }
  }
  return std::nullopt;
}

}  // namespace mosim
