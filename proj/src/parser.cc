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

#include "mosim/parser.h"

#include "json.hpp"
#include "mosim/errors.h"

namespace mosim {

namespace {

bool IsLetter(unsigned char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool IsSpace(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool IsDeterminer(std::string_view t) { return t == "the" || t == "a"; }

// Describes why a token does not fit the expected category.
[[noreturn]] void Reject(const std::string &token, size_t pos, const char *expected,
                         const Lexicon &lex) {
  const bool known = IsDeterminer(token) || ParsePrep(token) || lex.FindNoun(token) ||
                     lex.FindVerbByForm(token);
  if (!known) throw UnknownWordError(token);
  throw GrammarError(pos, std::string("expected ") + expected + ", found '" + token + "'");
}

}  // namespace

std::optional<std::string> EventFrame::GroundId() const {
  if (!path) return std::nullopt;
  if (path->ground == theme) return path->ground + "_2";
  return path->ground;
}

std::vector<std::string> Tokenize(std::string_view input) {
  // Locate the optional final period: the last non-whitespace byte.
  size_t end = input.size();
  while (end > 0 && IsSpace(static_cast<unsigned char>(input[end - 1]))) --end;
  size_t period = std::string_view::npos;
  if (end > 0 && input[end - 1] == '.') period = end - 1;

  std::vector<std::string> tokens;
  std::string current;
  for (size_t i = 0; i < input.size(); ++i) {
    const auto c = static_cast<unsigned char>(input[i]);
    if (IsLetter(c)) {
      current.push_back(static_cast<char>(c | 0x20));
      continue;
    }
    if (!IsSpace(c) && i != period) throw IllegalCharacterError(i, c);
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

EventFrame ParseSentence(std::span<const std::string> tokens, const Lexicon &lex) {
  auto at = [&](size_t i) -> const std::string * {
    return i < tokens.size() ? &tokens[i] : nullptr;
  };
  auto expect_det = [&](size_t i) {
    const std::string *t = at(i);
    if (t == nullptr) throw GrammarError(i, "expected a determiner, found end of sentence");
    if (!IsDeterminer(*t)) Reject(*t, i, "a determiner", lex);
  };
  auto expect_noun = [&](size_t i) -> std::string {
    const std::string *t = at(i);
    if (t == nullptr) throw GrammarError(i, "expected a noun, found end of sentence");
    if (const NounEntry *n = lex.FindNoun(*t)) return n->lemma;
    Reject(*t, i, "a noun", lex);
  };

  EventFrame frame;
  expect_det(0);
  frame.theme = expect_noun(1);

  const std::string *v = at(2);
  if (v == nullptr) throw GrammarError(2, "expected a verb, found end of sentence");
  const VerbEntry *verb = lex.FindVerbByForm(*v);
  if (verb == nullptr) Reject(*v, 2, "a verb", lex);
  frame.verb = verb->lemma;

  if (tokens.size() > 3) {
    auto prep = ParsePrep(tokens[3]);
    if (!prep) Reject(tokens[3], 3, "a preposition", lex);
    expect_det(4);
    std::string ground = expect_noun(5);
    if (tokens.size() > 6) throw GrammarError(6, "unexpected '" + tokens[6] + "' after the path");
    if (!verb->Allows(*prep)) {
      throw PrepositionMismatchError(std::string(PrepName(*prep)), verb->lemma);
    }
    frame.path = PathPhrase{*prep, std::move(ground)};
  }
  return frame;
}

EventFrame ParseText(std::string_view input, const Lexicon &lex) {
  const std::vector<std::string> tokens = Tokenize(input);
  return ParseSentence(tokens, lex);
}

void ValidateFrame(const EventFrame &frame, const Lexicon &lex) {
  const VerbEntry *verb = lex.FindVerb(frame.verb);
  if (verb == nullptr) throw UnknownWordError(frame.verb);
  lex.LookupNoun(frame.theme);
  if (frame.path) {
    lex.LookupNoun(frame.path->ground);
    if (!verb->Allows(frame.path->prep)) {
      throw PrepositionMismatchError(std::string(PrepName(frame.path->prep)), verb->lemma);
    }
  }
}

std::string FrameToJson(const EventFrame &frame) {
  nlohmann::ordered_json j;
  j["verb"] = frame.verb;
  j["theme"] = frame.theme;
  if (frame.path) {
    j["path"] = {{"prep", PrepName(frame.path->prep)}, {"ground", frame.path->ground}};
  }
  return j.dump();
}

}  // namespace mosim
