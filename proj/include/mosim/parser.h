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

#ifndef MOSIM_PARSER_H_
#define MOSIM_PARSER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mosim/lexicon.h"

namespace mosim {

struct PathPhrase {
  Prep prep = Prep::kTo;
  std::string ground;  // noun lemma

  bool operator==(const PathPhrase &) const = default;
};

// A parsed motion sentence: the verb (by lemma), the moving theme, and an
// optional path adjunct naming the ground.
struct EventFrame {
  std::string verb;
  std::string theme;
  std::optional<PathPhrase> path;

  // Object ids the frame's roles bind to in a scene. The theme is named by
  // its lemma; a ground with the same lemma gets a "_2" suffix.
  std::string ThemeId() const { return theme; }
  std::optional<std::string> GroundId() const;

  bool operator==(const EventFrame &) const = default;
};

// Splits controlled-English text into case-folded alphabetic tokens. A single
// trailing period (optionally followed by whitespace) is dropped. Any other
// non-letter, non-whitespace byte raises IllegalCharacterError.
std::vector<std::string> Tokenize(std::string_view input);

// Parses S -> Det N V (P Det N)? with Det in {the, a}.
EventFrame ParseSentence(std::span<const std::string> tokens, const Lexicon &lex);

// Tokenize followed by ParseSentence.
EventFrame ParseText(std::string_view input, const Lexicon &lex);

// Throws the parser's error for a frame that violates its invariants.
void ValidateFrame(const EventFrame &frame, const Lexicon &lex);

// {"verb": ..., "theme": ..., "path": {"prep": ..., "ground": ...}}
std::string FrameToJson(const EventFrame &frame);

}  // namespace mosim

#endif  // MOSIM_PARSER_H_
