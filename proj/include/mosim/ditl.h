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

#ifndef MOSIM_DITL_H_
#define MOSIM_DITL_H_

// Abstract syntax of dynamic interval temporal logic programs and formulas.
//
// Programs change world states; formulas are state predicates. Terms,
// formulas and programs are immutable handles over shared nodes, so
// sub-programs may be shared freely between larger programs.

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "mosim/kinematics.h"
#include "mosim/lexicon.h"
#include "mosim/vec3.h"

namespace mosim {

enum class AttrName { kLoc, kRot, kVel };
std::string_view AttrNameText(AttrName name);

// An assignable attribute of an object: loc (m), rot (rad), vel (m/s).
struct Attr {
  std::string object;
  AttrName name = AttrName::kLoc;

  bool operator==(const Attr &) const = default;
};

struct TermNode;
struct FormulaNode;
struct ProgramNode;

class Term {
 public:
  enum class Kind { kScalar, kVector, kAttr, kSum, kDifference, kProduct };

  static Term Scalar(double value);
  static Term Vector(const Vec3 &value);
  static Term Of(Attr attr);
  static Term Sum(Term lhs, Term rhs);
  static Term Difference(Term lhs, Term rhs);
  static Term Product(Term lhs, Term rhs);

  const TermNode &node() const { return *node_; }
  Kind kind() const;

 private:
  friend class Formula;
  friend class Program;
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

class Program;

class Formula {
 public:
  enum class Kind { kTrue, kFalse, kEC, kDC, kAt, kEq, kLeq, kNot, kAnd, kOr, kDiamond };

  static Formula True();
  static Formula False();
  static Formula EC(std::string a, std::string b);
  static Formula DC(std::string a, std::string b);
  static Formula At(std::string a, std::string b);
  // Throws InvalidProgramError unless tolerance > 0.
  static Formula Eq(Term lhs, Term rhs, double tolerance);
  static Formula Leq(Term lhs, Term rhs);
  static Formula Not(Formula f);
  static Formula And(Formula f, Formula g);
  static Formula Or(Formula f, Formula g);
  static Formula Diamond(Program program, Formula f);

  const FormulaNode &node() const { return *node_; }
  Kind kind() const;
  bool ContainsDiamond() const;

 private:
  friend class Program;
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

class Program {
 public:
  enum class Kind { kAssign, kDirectedAssign, kTest, kTick, kSeq, kChoice, kStar };

  static Program Assign(Attr attr, Term value);
  // Assignment that fails unless the new value differs from the old one.
  static Program DirectedAssign(Attr attr, Term value);
  static Program Test(Formula f);
  static Program Tick(Action action, std::string object);
  static Program Seq(Program first, Program second);
  static Program Choice(Program first, Program second);
  // Throws InvalidProgramError unless bound >= 1.
  static Program Star(Program body, int bound);

  const ProgramNode &node() const { return *node_; }
  Kind kind() const;

 private:
  friend class Formula;
  explicit Program(std::shared_ptr<const ProgramNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ProgramNode> node_;
};

struct TermNode {
  Term::Kind kind;
  double scalar = 0.0;
  Vec3 vector;
  Attr attr;
  std::shared_ptr<const TermNode> lhs, rhs;
};

struct FormulaNode {
  Formula::Kind kind;
  std::string a, b;                      // EC, DC, at
  std::shared_ptr<const TermNode> lhs, rhs;  // eq, leq
  double tolerance = 0.0;                // eq
  std::shared_ptr<const FormulaNode> f, g;   // not, and, or, diamond body
  std::shared_ptr<const ProgramNode> program;  // diamond
};

struct ProgramNode {
  Program::Kind kind;
  Attr attr;                                 // assignments
  std::shared_ptr<const TermNode> term;      // assignments
  std::shared_ptr<const FormulaNode> formula;  // test
  Action action = Action::kMove;             // tick
  std::string object;                        // tick
  std::shared_ptr<const ProgramNode> first, second;  // seq, choice, star body
  int bound = 0;                             // star
};

// Tolerance for assignment equality (DirectedAssign), meters or radians.
inline constexpr double kAssignTolerance = 1e-9;

using Value = std::variant<double, Vec3>;

// Evaluates a term in a state. Throws DimensionError and UnboundObjectError.
Value EvalTerm(const TermNode &term, const WorldState &state);
inline Value EvalTerm(const Term &term, const WorldState &state) {
  return EvalTerm(term.node(), state);
}

// Whether two values agree within `tolerance` (Euclidean for vectors).
bool ValuesEqual(const Value &a, const Value &b, double tolerance);

// Result of evaluating a formula. A modal subformula whose search was cut
// short by the tick budget evaluates conservatively to false and sets
// `undetermined`.
struct FormulaValue {
  bool value = false;
  bool undetermined = false;
};

// Default cap on search nodes for modal evaluation and enumeration.
inline constexpr size_t kDefaultNodeCap = 1'000'000;

FormulaValue EvalFormula(const FormulaNode &f, const WorldState &state, int budget,
                         size_t node_cap = kDefaultNodeCap);
inline FormulaValue EvalFormula(const Formula &f, const WorldState &state, int budget,
                                size_t node_cap = kDefaultNodeCap) {
  return EvalFormula(f.node(), state, budget, node_cap);
}

// Textual forms (see docs/program_format.md). Numbers print with 17
// significant digits so that parsing the text reproduces the value.
std::string ToText(const Term &term);
std::string ToText(const Formula &formula);
std::string ToText(const Program &program);
std::string ToText(const TermNode &term);
std::string ToText(const FormulaNode &formula);
std::string ToText(const ProgramNode &program);

// Parses the textual program form. `(tick ACTION)` without an object acts
// on `default_object`. Throws ProgramSyntaxError.
Program ParseProgram(std::string_view text, std::string_view default_object = "ball");
Formula ParseFormula(std::string_view text);

// Structural equality.
bool operator==(const Term &a, const Term &b);
bool operator==(const Formula &a, const Formula &b);
bool operator==(const Program &a, const Program &b);

}  // namespace mosim

#endif  // MOSIM_DITL_H_
