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

#include "mosim/lexicon.h"

#include <string>

#include "doctest.h"
#include "mosim/errors.h"

namespace mosim {
namespace {

constexpr char kCustom[] = R"({
  "nouns": [
    {"lemma": "marble", "shape": "sphere", "dimensions": {"radius": 0.01}, "mobile": true},
    {"lemma": "crate", "shape": "box",
     "dimensions": {"width": 0.5, "height": 0.4, "depth": 0.3}, "mobile": true}
  ],
  "verbs": [
    {"lemma": "tumble", "past_forms": ["tumbled"], "class": "manner", "tick_action": "roll",
     "allowed_preps": ["to", "from"]}
  ]
})";

TEST_CASE("builtin lexicon holds the standard entries") {
  const Lexicon lex = BuiltinLexicon();
  CHECK(lex.nouns().size() == 5);
  CHECK(lex.verbs().size() == 7);
  CHECK(lex.FindNoun("ball")->dimensions.radius == 0.5);
  CHECK_FALSE(lex.FindNoun("wall")->mobile);
  CHECK(lex.FindVerbByForm("slid")->lemma == "slide");
  CHECK(lex.FindVerbByForm("LEFT")->lemma == "leave");
  CHECK(lex.FindVerb("arrive")->path_kind == PathKind::kArrive);
  CHECK(lex.FindVerb("arrive")->Allows(Prep::kAt));
  CHECK_FALSE(lex.FindVerb("roll")->Allows(Prep::kAt));
}

TEST_CASE("every builtin verb carries the profile of its action") {
  const Lexicon lex = BuiltinLexicon();
  for (const auto &[lemma, verb] : lex.verbs()) {
    CAPTURE(lemma);
    CHECK(verb.profile == ProfileForAction(verb.tick_action));
    CHECK_FALSE(CheckVerb(verb).has_value());
  }
  CHECK(ProfileForAction(Action::kRoll) ==
        MannerProfile{ContactProfile::kAlwaysEC, RotationCoupling::kArcLength});
  CHECK(ProfileForAction(Action::kSlide) ==
        MannerProfile{ContactProfile::kAlwaysEC, RotationCoupling::kNone});
  CHECK(ProfileForAction(Action::kFly) ==
        MannerProfile{ContactProfile::kAlwaysDC, RotationCoupling::kNone});
  CHECK(ProfileForAction(Action::kBounce).floor_contact == ContactProfile::kAlternating);
}

TEST_CASE("loading merges over the builtin entries") {
  const Lexicon lex = LoadLexicon(kCustom);
  CHECK(lex.FindNoun("ball") != nullptr);
  CHECK(lex.FindNoun("marble")->dimensions.radius == 0.01);
  CHECK(lex.FindNoun("crate")->dimensions.depth == 0.3);
  const VerbEntry *tumble = lex.FindVerbByForm("tumbled");
  REQUIRE(tumble != nullptr);
  CHECK(tumble->profile == ProfileForAction(Action::kRoll));
  CHECK(lex.size() == BuiltinLexicon().size() + 3);
}

TEST_CASE("serialization round-trips") {
  const Lexicon lex = LoadLexicon(kCustom);
  const std::string text = SerializeLexicon(lex);
  CHECK(LoadLexicon(text) == lex);
  CHECK(SerializeLexicon(LoadLexicon(text)) == text);
}

TEST_CASE("schema violations report line and field") {
  SUBCASE("negative radius") {
    const std::string doc =
        "{\"nouns\": [\n"
        "  {\"lemma\": \"ball\", \"shape\": \"sphere\", \"dimensions\": {\"radius\": 0.5},"
        " \"mobile\": true},\n"
        "  {\"lemma\": \"pebble\", \"shape\": \"sphere\", \"dimensions\": {\"radius\": -1},"
        " \"mobile\": true}\n"
        "]}";
    try {
      LoadLexicon(doc);
      FAIL("expected LexiconFormatError");
    } catch (const LexiconFormatError &e) {
      CHECK(e.line() == 3);
      CHECK(e.field().find("radius") != std::string::npos);
    }
  }
  SUBCASE("unknown key") {
    CHECK_THROWS_AS(LoadLexicon(R"({"nouns": [{"lemma": "x", "shape": "sphere",
        "dimensions": {"radius": 1}, "mobile": true, "colour": "red"}]})"),
                    LexiconFormatError);
  }
  SUBCASE("unknown top-level key") {
    CHECK_THROWS_AS(LoadLexicon(R"({"adjectives": []})"), LexiconFormatError);
  }
  SUBCASE("malformed JSON") {
    try {
      LoadLexicon("{\n\"nouns\": [\n,]}");
      FAIL("expected LexiconFormatError");
    } catch (const LexiconFormatError &e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("profile that contradicts the action") {
    CHECK_THROWS_AS(LoadLexicon(R"({"verbs": [{"lemma": "glide", "past_forms": ["glided"],
        "class": "manner", "tick_action": "slide",
        "profile": {"floor_contact": "always_EC", "rotation_coupling": "arc_length"}}]})"),
                    LexiconFormatError);
  }
  SUBCASE("path verb without a path kind") {
    CHECK_THROWS_AS(LoadLexicon(R"({"verbs": [{"lemma": "reach", "past_forms": ["reached"],
        "class": "path", "allowed_preps": ["to"]}]})"),
                    LexiconFormatError);
  }
  SUBCASE("mobile plane") {
    CHECK_THROWS_AS(LoadLexicon(R"({"nouns": [{"lemma": "ramp", "shape": "plane",
        "dimensions": {"normal": "y"}, "mobile": true}]})"),
                    LexiconFormatError);
  }
}

TEST_CASE("duplicate entries are rejected") {
  CHECK_THROWS_AS(LoadLexicon(R"({"nouns": [
      {"lemma": "cube", "shape": "box", "dimensions": {"width": 1, "height": 1, "depth": 1},
       "mobile": true},
      {"lemma": "cube", "shape": "box", "dimensions": {"width": 2, "height": 2, "depth": 2},
       "mobile": true}]})"),
                  DuplicateEntryError);
  // A past form that collides with another verb's form is ambiguous.
  CHECK_THROWS_AS(LoadLexicon(R"({"verbs": [{"lemma": "roam", "past_forms": ["rolled"],
      "class": "generic", "tick_action": "move"}]})"),
                  DuplicateEntryError);
  // Redefining a builtin lemma replaces it.
  const Lexicon lex = LoadLexicon(R"({"nouns": [{"lemma": "ball", "shape": "sphere",
      "dimensions": {"radius": 0.25}, "mobile": true}]})");
  CHECK(lex.FindNoun("ball")->dimensions.radius == 0.25);
  const Lexicon boxy = LoadLexicon(R"({"nouns": [{"lemma": "ball", "shape": "box",
      "dimensions": {"width": 1, "height": 1, "depth": 1}, "mobile": true}]})");
  CHECK(boxy.LookupNoun("ball").shape == Shape::kBox);
  CHECK(boxy.size() == BuiltinLexicon().size());
}

TEST_CASE("a failed insert leaves the lexicon unchanged") {
  Lexicon lex = BuiltinLexicon();
  VerbEntry bad = *lex.FindVerb("move");
  bad.lemma = "shift";
  bad.past_forms = {"slid"};
  CHECK_THROWS_AS(lex.PutVerb(bad), DuplicateEntryError);
  CHECK(lex == BuiltinLexicon());
}

TEST_CASE("lookups of unknown words name the token") {
  const Lexicon lex = BuiltinLexicon();
  try {
    lex.LookupNoun("zorp");
    FAIL("expected UnknownWordError");
  } catch (const UnknownWordError &e) {
    CHECK(e.token() == "zorp");
  }
  CHECK_THROWS_AS(lex.LookupVerbByForm("zoomed"), UnknownWordError);
}

TEST_CASE("the documented example lexicon loads") {
  const Lexicon lex = LoadLexiconFile(std::string(MOSIM_DOCS_DIR) + "/lexicon.json");
  CHECK(lex.size() == BuiltinLexicon().size() + 7);
  CHECK(lex.FindVerbByForm("glid")->tick_action == Action::kFly);
  CHECK(lex.FindVerb("reach")->path_kind == PathKind::kArrive);
  CHECK(lex.FindNoun("kite")->default_altitude == 1.0);
  CHECK_THROWS_AS(LoadLexiconFile(std::string(MOSIM_DOCS_DIR) + "/missing.json"),
                  LexiconFormatError);
}

TEST_CASE("names parse back to their enumerators") {
  for (Action a : {Action::kRoll, Action::kSlide, Action::kBounce, Action::kFly, Action::kMove}) {
    CHECK(ParseAction(ActionName(a)) == a);
  }
  for (Prep p : {Prep::kTo, Prep::kFrom, Prep::kTowards, Prep::kAt}) {
    CHECK(ParsePrep(PrepName(p)) == p);
  }
  for (ContactProfile c : {ContactProfile::kAlwaysEC, ContactProfile::kAlwaysDC,
                           ContactProfile::kAlternating, ContactProfile::kUnconstrained}) {
    CHECK(ParseContactProfile(ContactProfileName(c)) == c);
  }
  CHECK_FALSE(ParseShape("cone").has_value());
}

}  // namespace
}  // namespace mosim
