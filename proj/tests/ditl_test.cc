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

#include "mosim/ditl.h"

#include <string>
#include <variant>

#include "doctest.h"
#include "mosim/errors.h"
#include "mosim/kinematics.h"
#include "test_util.h"

namespace mosim {
namespace {

Scene Example() {
  const Lexicon lex = BuiltinLexicon();
  return BuildScene(ParseText("the ball rolled to the wall", lex), lex, SceneConfig{});
}

TEST_CASE("terms evaluate against a state") {
  const WorldState s = Example().initial;
  const Attr loc{"ball", AttrName::kLoc};
  CHECK(std::get<Vec3>(EvalTerm(Term::Of(loc), s)) == Vec3{0, 0.5, 0});
  const Term shifted = Term::Sum(Term::Of(loc), Term::Vector({1, 0, 0}));
  CHECK(std::get<Vec3>(EvalTerm(shifted, s)) == Vec3{1, 0.5, 0});
  CHECK(std::get<Vec3>(EvalTerm(Term::Product(Term::Scalar(2), Term::Of(loc)), s)) ==
        Vec3{0, 1, 0});
  CHECK(std::get<double>(EvalTerm(Term::Difference(Term::Scalar(3), Term::Scalar(1)), s)) == 2);
  CHECK_THROWS_AS(EvalTerm(Term::Sum(Term::Of(loc), Term::Scalar(1)), s), DimensionError);
  CHECK_THROWS_AS(EvalTerm(Term::Of({"kite", AttrName::kRot}), s), UnboundObjectError);
}

TEST_CASE("atomic formulas and connectives") {
  const WorldState s = Example().initial;
  auto holds = [&](const Formula &f) { return EvalFormula(f, s, 0).value; };
  CHECK(holds(Formula::EC("ball", "floor")));
  CHECK(holds(Formula::DC("ball", "wall")));
  CHECK(holds(Formula::Not(Formula::At("ball", "wall"))));
  CHECK_FALSE(holds(Formula::And(Formula::True(), Formula::False())));
  CHECK(holds(Formula::Or(Formula::False(), Formula::True())));
  const Term rot = Term::Of({"ball", AttrName::kRot});
  CHECK(holds(Formula::Eq(rot, Term::Scalar(1e-10), 1e-9)));
  CHECK_FALSE(holds(Formula::Eq(rot, Term::Scalar(1e-8), 1e-9)));
  CHECK(holds(Formula::Leq(rot, Term::Scalar(0))));
  CHECK_THROWS_AS(holds(Formula::EC("ball", "kite")), UnboundObjectError);
  CHECK_THROWS_AS(Formula::Eq(rot, rot, 0.0), InvalidProgramError);
  CHECK_THROWS_AS(Program::Star(Program::Test(Formula::True()), 0), InvalidProgramError);
}

// Forward stepping: the first tick count at which rolling reaches the wall.
int TicksToContact(WorldState s, int limit) {
  for (int n = 0; n <= limit; ++n) {
    if (ContactRelation(s.Get("ball"), s.Get("wall"), s.physics.contact_eps) == Relation::kEC) {
      return n;
    }
    s = Tick(s, Action::kRoll, "ball", s.Get("ball").heading);
  }
  return -1;
}

TEST_CASE("diamond agrees with forward stepping") {
  const WorldState s = Example().initial;
  const int needed = TicksToContact(s, 1000);
  REQUIRE(needed > 0);
  for (int bound : {200, 263, 264, 300}) {
    CAPTURE(bound);
    const Formula f = Formula::Diamond(
        Program::Star(Program::Tick(Action::kRoll, "ball"), bound), Formula::At("ball", "wall"));
    const FormulaValue v = EvalFormula(f, s, 1000);
    CHECK(v.value == (needed <= bound));
    CHECK_FALSE(v.undetermined);
  }
}

TEST_CASE("diamond cut short by the budget is undetermined") {
  const WorldState s = Example().initial;
  const Formula f = Formula::Diamond(
      Program::Star(Program::Tick(Action::kRoll, "ball"), 300), Formula::At("ball", "wall"));
  const FormulaValue v = EvalFormula(f, s, 50);
  CHECK_FALSE(v.value);
  CHECK(v.undetermined);
  // Negation does not turn an undetermined false into a true.
  CHECK_FALSE(EvalFormula(Formula::Not(f), s, 50).value);
}

TEST_CASE("program text round-trips") {
  const char *kTexts[] = {
      "(seq (star (seq (test (not (at ball wall))) (tick roll ball)) 10000) (test (at ball wall)))",
      "(choice (tick slide ball) (tick fly bird))",
      "(dassign (loc ball) (+ (loc ball) (vec 0.10000000000000001 0 0)))",
      "(seq (assign (rot ball) (* 2 (rot ball))) (test (and (leq (rot ball) 1) (eq (vel ball) (vec 0 0 0) 0.001))))",
      "(test (dia (star (tick roll ball) 3) (or (EC ball wall) (DC ball floor))))",
  };
  for (const char *text : kTexts) {
    CAPTURE(text);
    const Program p = ParseProgram(text);
    CHECK(ToText(p) == text);
    CHECK(ParseProgram(ToText(p)) == p);
  }
  CHECK(ToText(ParseProgram("(tick roll)", "block")) == "(tick roll block)");
  CHECK(ToText(ParseProgram("(seq (tick roll) (tick slide) (tick roll)) ; comment")) ==
        "(seq (tick roll ball) (tick slide ball) (tick roll ball))");
  // Sequences print flat but keep their right-nested structure.
  const Program nested = ParseProgram("(seq (tick roll) (seq (tick slide) (tick roll)))");
  CHECK(nested.node().second->kind == Program::Kind::kSeq);
  CHECK(ParseProgram(ToText(nested)) == nested);
}

TEST_CASE("program syntax errors carry an offset") {
  for (const char *bad : {"(tick hop)", "(seq (tick roll)", "(star (tick roll) 0)",
                          "(test (EC ball))", "(assign (loc ball))", "(tick roll) extra", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ParseProgram(bad), Error);
  }
  try {
    ParseProgram("(seq (tick roll) (bogus))");
    FAIL("expected ProgramSyntaxError");
  } catch (const ProgramSyntaxError &e) {
    CHECK(e.offset() == 18);
  }
}

}  // namespace
}  // namespace mosim
