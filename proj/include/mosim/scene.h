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

#ifndef MOSIM_SCENE_H_
#define MOSIM_SCENE_H_

#include <optional>
#include <string>

#include "mosim/config.h"
#include "mosim/kinematics.h"
#include "mosim/lexicon.h"
#include "mosim/parser.h"
#include "mosim/rng.h"

namespace mosim {

// Id of the support plane present in every scene.
inline constexpr char kFloorId[] = "floor";

// The minimal model of a sentence: the mentioned objects plus the floor.
struct Scene {
  WorldState initial;
  std::string theme;                  // object id bound to the theme role
  std::optional<std::string> ground;  // object id bound to the ground role
  Vec3 direction;                     // horizontal unit motion direction

  bool operator==(const Scene &) const = default;
};

// Values the sentence leaves open.
struct ResolvedParams {
  int bare_frames = 0;          // duration of a bare manner verb
  double direction_angle = 0.0;  // rad in [0, 2pi), about +y from +x toward +z
};

// Draws the bare-verb duration uniformly from [min_bare_frames,
// max_bare_frames], then the direction angle uniformly from [0, 2pi).
ResolvedParams SampleUnderspecified(const SceneConfig &cfg, Rng &rng);

// The canonical draw for a seed, taken from the kUnderspecified stream.
ResolvedParams ResolveForSeed(const SceneConfig &cfg);

// Instantiates the theme resting on the floor (or at its cruise altitude
// for flying), places a goal or locative ground `ground_distance` along +x,
// and puts the theme in contact with a source ground ("from") moving away
// from it. Without a ground the direction is the seeded angle. Throws
// ImmobileThemeError, UnknownWordError, ConfigError (interpenetrating
// placement).
Scene BuildScene(const EventFrame &frame, const Lexicon &lex, const SceneConfig &cfg);

// Describes the first violated scene invariant, if any.
std::optional<std::string> CheckScene(const Scene &scene);

}  // namespace mosim

#endif  // MOSIM_SCENE_H_
