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

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "mosim/errors.h"
#include "mosim/execute.h"

namespace mosim {

namespace {

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double AsScalar(const Value &v, const char *what) {
  if (const double *d = std::get_if<double>(&v)) return *d;
  throw DimensionError(std::string(what) + " requires a scalar");
}

}  // namespace

std::string_view AttrNameText(AttrName name) {
  switch (name) {
    case AttrName::kLoc:
      return "loc";
    case AttrName::kRot:
      return "rot";
    case AttrName::kVel:
      return "vel";
  }
  return "?";
}

// Terms.

Term::Kind Term::kind() const { return node_->kind; }

Term Term::Scalar(double value) {
  auto n = std::make_shared<TermNode>();
  n->kind = Kind::kScalar;
  n->scalar = value;
  return Term(std::move(n));
}

Term Term::Vector(const Vec3 &value) {
  auto n = std::make_shared<TermNode>();
  n->kind = Kind::kVector;
  n->vector = value;
  return Term(std::move(n));
}

Term Term::Of(Attr attr) {
  auto n = std::make_shared<TermNode>();
  n->kind = Kind::kAttr;
  n->attr = std::move(attr);
  return Term(std::move(n));
}

namespace {

std::shared_ptr<TermNode> NewBinary(Term::Kind kind, std::shared_ptr<const TermNode> lhs,
                                    std::shared_ptr<const TermNode> rhs) {
  auto n = std::make_shared<TermNode>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

}  // namespace

Term Term::Sum(Term lhs, Term rhs) {
  return Term(NewBinary(Kind::kSum, std::move(lhs.node_), std::move(rhs.node_)));
}

Term Term::Difference(Term lhs, Term rhs) {
  return Term(NewBinary(Kind::kDifference, std::move(lhs.node_), std::move(rhs.node_)));
}

Term Term::Product(Term lhs, Term rhs) {
  return Term(NewBinary(Kind::kProduct, std::move(lhs.node_), std::move(rhs.node_)));
}

Value EvalTerm(const TermNode &t, const WorldState &state) {
  switch (t.kind) {
    case Term::Kind::kScalar:
      return t.scalar;
    case Term::Kind::kVector:
      return t.vector;
    case Term::Kind::kAttr: {
      const Body &b = state.Get(t.attr.object);
      switch (t.attr.name) {
        case AttrName::kLoc:
          return b.position;
        case AttrName::kRot:
          return b.rotation;
        case AttrName::kVel:
          return b.velocity;
      }
      break;
    }
    case Term::Kind::kSum:
    case Term::Kind::kDifference: {
      const Value l = EvalTerm(*t.lhs, state);
      const Value r = EvalTerm(*t.rhs, state);
      const double sign = t.kind == Term::Kind::kSum ? 1.0 : -1.0;
      if (l.index() != r.index()) throw DimensionError("cannot add a scalar and a vector");
      if (const double *a = std::get_if<double>(&l)) return *a + sign * std::get<double>(r);
      return std::get<Vec3>(l) + std::get<Vec3>(r) * sign;
    }
    case Term::Kind::kProduct: {
      const Value l = EvalTerm(*t.lhs, state);
      const Value r = EvalTerm(*t.rhs, state);
      const double *ls = std::get_if<double>(&l);
      const double *rs = std::get_if<double>(&r);
      if (ls && rs) return *ls * *rs;
      if (ls) return std::get<Vec3>(r) * *ls;
      if (rs) return std::get<Vec3>(l) * *rs;
      throw DimensionError("product of two vectors");
    }
  }
  throw DimensionError("malformed term");
}

bool ValuesEqual(const Value &a, const Value &b, double tolerance) {
  if (a.index() != b.index()) throw DimensionError("cannot compare a scalar with a vector");
  if (const double *x = std::get_if<double>(&a)) {
    return std::abs(*x - std::get<double>(b)) <= tolerance;
  }
  return Distance(std::get<Vec3>(a), std::get<Vec3>(b)) <= tolerance;
}

// Formulas.

Formula::Kind Formula::kind() const { return node_->kind; }

namespace {

std::shared_ptr<FormulaNode> NewFormula(Formula::Kind kind) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  return n;
}

bool NodeContainsDiamond(const FormulaNode &f) {
  if (f.kind == Formula::Kind::kDiamond) return true;
  if (f.f && NodeContainsDiamond(*f.f)) return true;
  if (f.g && NodeContainsDiamond(*f.g)) return true;
  return false;
}

}  // namespace

Formula Formula::True() { return Formula(NewFormula(Kind::kTrue)); }
Formula Formula::False() { return Formula(NewFormula(Kind::kFalse)); }

Formula Formula::EC(std::string a, std::string b) {
  auto n = NewFormula(Kind::kEC);
  n->a = std::move(a);
  n->b = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::DC(std::string a, std::string b) {
  auto n = NewFormula(Kind::kDC);
  n->a = std::move(a);
  n->b = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::At(std::string a, std::string b) {
  auto n = NewFormula(Kind::kAt);
  n->a = std::move(a);
  n->b = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::Eq(Term lhs, Term rhs, double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidProgramError("eq tolerance must be > 0");
  auto n = NewFormula(Kind::kEq);
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  n->tolerance = tolerance;
  return Formula(std::move(n));
}

Formula Formula::Leq(Term lhs, Term rhs) {
  auto n = NewFormula(Kind::kLeq);
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::Not(Formula f) {
  auto n = NewFormula(Kind::kNot);
  n->f = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::And(Formula f, Formula g) {
  auto n = NewFormula(Kind::kAnd);
  n->f = std::move(f.node_);
  n->g = std::move(g.node_);
  return Formula(std::move(n));
}

Formula Formula::Or(Formula f, Formula g) {
  auto n = NewFormula(Kind::kOr);
  n->f = std::move(f.node_);
  n->g = std::move(g.node_);
  return Formula(std::move(n));
}

Formula Formula::Diamond(Program program, Formula f) {
  auto n = NewFormula(Kind::kDiamond);
  n->program = std::move(program.node_);
  n->f = std::move(f.node_);
  return Formula(std::move(n));
}

bool Formula::ContainsDiamond() const { return NodeContainsDiamond(*node_); }

FormulaValue EvalFormula(const FormulaNode &f, const WorldState &state, int budget,
                         size_t node_cap) {
  using K = Formula::Kind;
  const double eps = state.physics.contact_eps;
  switch (f.kind) {
    case K::kTrue:
      return {true, false};
    case K::kFalse:
      return {false, false};
    case K::kEC:
      return {ContactRelation(state.Get(f.a), state.Get(f.b), eps) == Relation::kEC, false};
    case K::kDC:
      return {ContactRelation(state.Get(f.a), state.Get(f.b), eps) == Relation::kDC, false};
    case K::kAt:
      // Touching or (faultily) overlapping: the negation is exactly DC.
      return {SurfaceDistance(state.Get(f.a), state.Get(f.b)) <= eps, false};
    case K::kEq:
      return {ValuesEqual(EvalTerm(*f.lhs, state), EvalTerm(*f.rhs, state), f.tolerance), false};
    case K::kLeq:
      return {AsScalar(EvalTerm(*f.lhs, state), "leq") <= AsScalar(EvalTerm(*f.rhs, state), "leq"),
              false};
    case K::kNot: {
      const FormulaValue v = EvalFormula(*f.f, state, budget, node_cap);
      // An undetermined modal stays conservative: its negation is not
      // claimed true either.
      if (v.undetermined) return {false, true};
      return {!v.value, false};
    }
    case K::kAnd: {
      const FormulaValue a = EvalFormula(*f.f, state, budget, node_cap);
      if (!a.value && !a.undetermined) return a;
      const FormulaValue b = EvalFormula(*f.g, state, budget, node_cap);
      return {a.value && b.value, a.undetermined || b.undetermined};
    }
    case K::kOr: {
      const FormulaValue a = EvalFormula(*f.f, state, budget, node_cap);
      if (a.value) return a;
      const FormulaValue b = EvalFormula(*f.g, state, budget, node_cap);
      if (b.value) return b;
      return {false, a.undetermined || b.undetermined};
    }
    case K::kDiamond:
      return DiamondHolds(*f.program, *f.f, state, budget, node_cap);
  }
  return {false, false};
}

// Programs.

Program::Kind Program::kind() const { return node_->kind; }

namespace {

std::shared_ptr<ProgramNode> NewProgram(Program::Kind kind) {
  auto n = std::make_shared<ProgramNode>();
  n->kind = kind;
  return n;
}

}  // namespace

Program Program::Assign(Attr attr, Term value) {
  auto n = NewProgram(Kind::kAssign);
  n->attr = std::move(attr);
  n->term = std::move(value.node_);
  return Program(std::move(n));
}

Program Program::DirectedAssign(Attr attr, Term value) {
  auto n = NewProgram(Kind::kDirectedAssign);
  n->attr = std::move(attr);
  n->term = std::move(value.node_);
  return Program(std::move(n));
}

Program Program::Test(Formula f) {
  auto n = NewProgram(Kind::kTest);
  n->formula = std::move(f.node_);
  return Program(std::move(n));
}

Program Program::Tick(Action action, std::string object) {
  auto n = NewProgram(Kind::kTick);
  n->action = action;
  n->object = std::move(object);
  return Program(std::move(n));
}

Program Program::Seq(Program first, Program second) {
  auto n = NewProgram(Kind::kSeq);
  n->first = std::move(first.node_);
  n->second = std::move(second.node_);
  return Program(std::move(n));
}

Program Program::Choice(Program first, Program second) {
  auto n = NewProgram(Kind::kChoice);
  n->first = std::move(first.node_);
  n->second = std::move(second.node_);
  return Program(std::move(n));
}

Program Program::Star(Program body, int bound) {
  if (bound < 1) throw InvalidProgramError("star bound must be a positive integer");
  auto n = NewProgram(Kind::kStar);
  n->first = std::move(body.node_);
  n->bound = bound;
  return Program(std::move(n));
}

// Text form.

std::string ToText(const TermNode &t) {
  switch (t.kind) {
    case Term::Kind::kScalar:
      return FormatNumber(t.scalar);
    case Term::Kind::kVector:
      return "(vec " + FormatNumber(t.vector.x) + " " + FormatNumber(t.vector.y) + " " +
             FormatNumber(t.vector.z) + ")";
    case Term::Kind::kAttr:
      return "(" + std::string(AttrNameText(t.attr.name)) + " " + t.attr.object + ")";
    case Term::Kind::kSum:
      return "(+ " + ToText(*t.lhs) + " " + ToText(*t.rhs) + ")";
    case Term::Kind::kDifference:
      return "(- " + ToText(*t.lhs) + " " + ToText(*t.rhs) + ")";
    case Term::Kind::kProduct:
      return "(* " + ToText(*t.lhs) + " " + ToText(*t.rhs) + ")";
  }
  return "?";
}

std::string ToText(const FormulaNode &f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::kTrue:
      return "true";
    case K::kFalse:
      return "false";
    case K::kEC:
      return "(EC " + f.a + " " + f.b + ")";
    case K::kDC:
      return "(DC " + f.a + " " + f.b + ")";
    case K::kAt:
      return "(at " + f.a + " " + f.b + ")";
    case K::kEq:
      return "(eq " + ToText(*f.lhs) + " " + ToText(*f.rhs) + " " + FormatNumber(f.tolerance) + ")";
    case K::kLeq:
      return "(leq " + ToText(*f.lhs) + " " + ToText(*f.rhs) + ")";
    case K::kNot:
      return "(not " + ToText(*f.f) + ")";
    case K::kAnd:
      return "(and " + ToText(*f.f) + " " + ToText(*f.g) + ")";
    case K::kOr:
      return "(or " + ToText(*f.f) + " " + ToText(*f.g) + ")";
    case K::kDiamond:
      return "(dia " + ToText(*f.program) + " " + ToText(*f.f) + ")";
  }
  return "?";
}

std::string ToText(const ProgramNode &p) {
  using K = Program::Kind;
  switch (p.kind) {
    case K::kAssign:
      return "(assign (" + std::string(AttrNameText(p.attr.name)) + " " + p.attr.object + ") " +
             ToText(*p.term) + ")";
    case K::kDirectedAssign:
      return "(dassign (" + std::string(AttrNameText(p.attr.name)) + " " + p.attr.object + ") " +
             ToText(*p.term) + ")";
    case K::kTest:
      return "(test " + ToText(*p.formula) + ")";
    case K::kTick:
      return "(tick " + std::string(ActionName(p.action)) + " " + p.object + ")";
    case K::kSeq: {
      // Right-nested sequences print flat.
      std::string out = "(seq " + ToText(*p.first);
      const ProgramNode *rest = p.second.get();
      while (rest->kind == K::kSeq) {
        out += " " + ToText(*rest->first);
        rest = rest->second.get();
      }
      return out + " " + ToText(*rest) + ")";
    }
    case K::kChoice:
      return "(choice " + ToText(*p.first) + " " + ToText(*p.second) + ")";
    case K::kStar:
      return "(star " + ToText(*p.first) + " " + std::to_string(p.bound) + ")";
  }
  return "?";
}

std::string ToText(const Term &t) { return ToText(t.node()); }
std::string ToText(const Formula &f) { return ToText(f.node()); }
std::string ToText(const Program &p) { return ToText(p.node()); }

bool operator==(const Term &a, const Term &b) { return ToText(a) == ToText(b); }
bool operator==(const Formula &a, const Formula &b) { return ToText(a) == ToText(b); }
bool operator==(const Program &a, const Program &b) { return ToText(a) == ToText(b); }

// Parser for the parenthesized text form.

namespace {

class TextReader {
 public:
  TextReader(std::string_view text, std::string_view default_object)
      : text_(text), default_object_(default_object) {}

  Program ReadProgram() {
    Expect('(');
    const size_t at = pos_;
    const std::string head = Atom();
    Program p = Program::Test(Formula::True());
    if (head == "tick") {
      const size_t action_at = pos_;
      auto action = ParseAction(Atom());
      if (!action) Fail(action_at, "unknown action");
      std::string object = Peek() == ')' ? std::string(default_object_) : Atom();
      p = Program::Tick(*action, std::move(object));
    } else if (head == "test") {
      p = Program::Test(ReadFormula());
    } else if (head == "assign" || head == "dassign") {
      Attr attr = ReadAttr();
      Term value = ReadTerm();
      p = head == "assign" ? Program::Assign(std::move(attr), std::move(value))
                           : Program::DirectedAssign(std::move(attr), std::move(value));
    } else if (head == "seq") {
      std::vector<Program> parts;
      while (Peek() != ')') parts.push_back(ReadProgram());
      if (parts.size() < 2) Fail(at, "seq needs at least two programs");
      p = parts.back();
      for (size_t i = parts.size() - 1; i-- > 0;) p = Program::Seq(parts[i], p);
    } else if (head == "choice") {
      Program a = ReadProgram();
      Program b = ReadProgram();
      p = Program::Choice(std::move(a), std::move(b));
    } else if (head == "star") {
      Program body = ReadProgram();
      const size_t bound_at = pos_;
      const double bound = Number();
      if (bound < 1 || bound != std::floor(bound) || bound > 1e9) {
        Fail(bound_at, "star bound must be a positive integer");
      }
      p = Program::Star(std::move(body), static_cast<int>(bound));
    } else {
      Fail(at, "unknown program form '" + head + "'");
    }
    Expect(')');
    return p;
  }

  Formula ReadFormula() {
    SkipSpace();
    if (Peek() != '(') {
      const size_t at = pos_;
      const std::string word = Atom();
      if (word == "true") return Formula::True();
      if (word == "false") return Formula::False();
      Fail(at, "expected a formula");
    }
    Expect('(');
    const size_t at = pos_;
    const std::string head = Atom();
    Formula f = Formula::True();
    if (head == "EC" || head == "DC" || head == "at") {
      std::string a = Atom();
      std::string b = Atom();
      f = head == "EC" ? Formula::EC(a, b) : head == "DC" ? Formula::DC(a, b) : Formula::At(a, b);
    } else if (head == "eq") {
      Term l = ReadTerm();
      Term r = ReadTerm();
      const size_t tol_at = pos_;
      const double tol = Number();
      if (!(tol > 0.0)) Fail(tol_at, "eq tolerance must be > 0");
      f = Formula::Eq(std::move(l), std::move(r), tol);
    } else if (head == "leq") {
      Term l = ReadTerm();
      Term r = ReadTerm();
      f = Formula::Leq(std::move(l), std::move(r));
    } else if (head == "not") {
      f = Formula::Not(ReadFormula());
    } else if (head == "and" || head == "or") {
      Formula a = ReadFormula();
      Formula b = ReadFormula();
      f = head == "and" ? Formula::And(std::move(a), std::move(b))
                        : Formula::Or(std::move(a), std::move(b));
    } else if (head == "dia") {
      Program p = ReadProgram();
      Formula g = ReadFormula();
      f = Formula::Diamond(std::move(p), std::move(g));
    } else {
      Fail(at, "unknown formula form '" + head + "'");
    }
    Expect(')');
    return f;
  }

  Term ReadTerm() {
    SkipSpace();
    if (Peek() != '(') return Term::Scalar(Number());
    const size_t open = pos_;
    Expect('(');
    const size_t at = pos_;
    const std::string head = Atom();
    if (head == "vec") {
      const double x = Number();
      const double y = Number();
      const double z = Number();
      Expect(')');
      return Term::Vector({x, y, z});
    }
    if (head == "+" || head == "-" || head == "*") {
      Term l = ReadTerm();
      Term r = ReadTerm();
      Expect(')');
      if (head == "+") return Term::Sum(std::move(l), std::move(r));
      if (head == "-") return Term::Difference(std::move(l), std::move(r));
      return Term::Product(std::move(l), std::move(r));
    }
    if (head == "loc" || head == "rot" || head == "vel") {
      pos_ = open;
      return Term::Of(ReadAttr());
    }
    Fail(at, "unknown term form '" + head + "'");
  }

  Attr ReadAttr() {
    Expect('(');
    const size_t at = pos_;
    const std::string name = Atom();
    Attr attr;
    if (name == "loc") {
      attr.name = AttrName::kLoc;
    } else if (name == "rot") {
      attr.name = AttrName::kRot;
    } else if (name == "vel") {
      attr.name = AttrName::kVel;
    } else {
      Fail(at, "unknown attribute '" + name + "'");
    }
    attr.object = Atom();
    Expect(')');
    return attr;
  }

  void ExpectEnd() {
    SkipSpace();
    if (pos_ != text_.size()) Fail(pos_, "trailing input");
  }

 private:
  [[noreturn]] void Fail(size_t at, const std::string &detail) const {
    throw ProgramSyntaxError(at, detail);
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void Expect(char c) {
    if (Peek() != c) Fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string Atom() {
    SkipSpace();
    const size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    if (pos_ == start) Fail(start, "expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }

  double Number() {
    const size_t at = pos_;
    const std::string word = Atom();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) Fail(at, "expected a number");
    return value;
  }

  std::string_view text_;
  std::string_view default_object_;
  size_t pos_ = 0;
};

}  // namespace

Program ParseProgram(std::string_view text, std::string_view default_object) {
  TextReader reader(text, default_object);
  Program p = reader.ReadProgram();
  reader.ExpectEnd();
  return p;
}

Formula ParseFormula(std::string_view text) {
  TextReader reader(text, "");
  Formula f = reader.ReadFormula();
  reader.ExpectEnd();
  return f;
}

}  // namespace mosim
