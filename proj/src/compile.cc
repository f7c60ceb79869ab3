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

#include "mosim/compile.h"

#include "mosim/errors.h"
#include "mosim/rng.h"
#include "mosim/scene.h"

namespace mosim {

CompileConfig CompileConfig::From(const SceneConfig &cfg) {
  return CompileConfig{cfg.max_frames, cfg.min_bare_frames, cfg.max_bare_frames, cfg.seed};
}

Program WhileNot(const Formula &goal, const Program &body, int bound) {
  return Program::Seq(Program::Star(Program::Seq(Program::Test(Formula::Not(goal)), body), bound),
                      Program::Test(goal));
}

Program Repeat(const Program &body, int n) {
  if (n <= 0) return Program::Test(Formula::True());
  Program p = body;
  for (int i = 1; i < n; ++i) p = Program::Seq(body, p);
  return p;
}

Program CompileEvent(const EventFrame &frame, const Lexicon &lex, const CompileConfig &cfg) {
  const VerbEntry *verb = lex.FindVerb(frame.verb);
  if (verb == nullptr) throw UnknownWordError(frame.verb);
  lex.LookupNoun(frame.theme);
  if (frame.path) {
    lex.LookupNoun(frame.path->ground);
    if (!verb->Allows(frame.path->prep)) {
      throw IncompatiblePathError("'" + verb->lemma + "' does not combine with '" +
                                  std::string(PrepName(frame.path->prep)) + "'");
    }
  }

  SceneConfig sample_cfg;
  sample_cfg.min_bare_frames = cfg.min_bare_frames;
  sample_cfg.max_bare_frames = cfg.max_bare_frames;
  sample_cfg.seed = cfg.seed;
  const int bare_frames = ResolveForSeed(sample_cfg).bare_frames;

  const std::string theme = frame.ThemeId();
  const Program tick = Program::Tick(verb->tick_action, theme);
  const Program bare = Repeat(tick, bare_frames);
  if (!frame.path) return bare;

  const std::string ground = *frame.GroundId();
  const Formula at = Formula::At(theme, ground);
  const Formula not_at = Formula::Not(at);
  const Prep prep = frame.path->prep;
  auto incompatible = [&]() -> IncompatiblePathError {
    return IncompatiblePathError("no encoding for '" + verb->lemma + " " +
                                 std::string(PrepName(prep)) + "'");
  };

  if (verb->verb_class != VerbClass::kPath) {
    switch (prep) {
      case Prep::kTo:
        return WhileNot(at, tick, cfg.max_frames);
      case Prep::kFrom:
        return Program::Seq(Program::Test(at), Program::Seq(bare, Program::Test(not_at)));
      case Prep::kTowards:
        return bare;
      case Prep::kAt:
        throw incompatible();
    }
  }

  const Program move = Program::Tick(Action::kMove, theme);
  switch (*verb->path_kind) {
    case PathKind::kArrive:
      if (prep != Prep::kAt && prep != Prep::kTo) throw incompatible();
      return Program::Seq(Program::Test(not_at), WhileNot(at, move, cfg.max_frames));
    case PathKind::kLeave:
      if (prep != Prep::kFrom) throw incompatible();
      return Program::Seq(Program::Test(at),
                          Program::Seq(Repeat(move, bare_frames), Program::Test(not_at)));
  }
  throw incompatible();
}

}  // namespace mosim
