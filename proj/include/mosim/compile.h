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

#ifndef MOSIM_COMPILE_H_
#define MOSIM_COMPILE_H_

#include <cstdint>

#include "mosim/config.h"
#include "mosim/ditl.h"
#include "mosim/lexicon.h"
#include "mosim/parser.h"

namespace mosim {

struct CompileConfig {
  int max_frames = 10000;  // bound of every while-loop Star
  int min_bare_frames = 30;
  int max_bare_frames = 300;
  uint64_t seed = 0;

  static CompileConfig From(const SceneConfig &cfg);
};

// (not goal? ; body)^bound ; goal?   -- "while not goal do body"
Program WhileNot(const Formula &goal, const Program &body, int bound);

// body ; body ; ... (n times). Zero repetitions is the trivial test.
Program Repeat(const Program &body, int n);

// Translates a frame into the program whose runs realize it.
//
//   manner/generic, bare       Tick(v) repeated n times, n seeded
//   manner/generic, to G       WhileNot(at(theme, G), Tick(v))
//   manner/generic, from G     at? ; bare ; (not at)?
//   manner/generic, towards G  bare (the scene points the theme at G)
//   arrive at G                (not at)? ; WhileNot(at, Tick(move))
//   leave from G               at? ; Tick(move) repeated n times ; (not at)?
//   path verb, bare            Tick(move) repeated n times
//
// Throws IncompatiblePathError when the preposition is not allowed for the
// verb or has no encoding for its class, UnknownWordError otherwise.
Program CompileEvent(const EventFrame &frame, const Lexicon &lex, const CompileConfig &cfg);

}  // namespace mosim

#endif  // MOSIM_COMPILE_H_
