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

#ifndef MOSIM_LEXICON_H_
#define MOSIM_LEXICON_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mosim {

enum class Shape { kSphere, kBox, kPlane };
enum class Axis { kX, kY, kZ };

// Geometry of a noun. Only the fields relevant to the shape are meaningful:
// spheres use radius; boxes use width (z), height (y) and depth (x, the
// axis along which grounds are approached); planes use the normal axis.
struct Dimensions {
  double radius = 0.0;
  double width = 0.0;
  double height = 0.0;
  double depth = 0.0;
  Axis normal = Axis::kY;

  bool operator==(const Dimensions &) const = default;
};

struct NounEntry {
  std::string lemma;
  Shape shape = Shape::kSphere;
  Dimensions dimensions;
  bool mobile = true;
  // Cruise height of the center for airborne motion; 0 means none declared.
  double default_altitude = 0.0;

  bool operator==(const NounEntry &) const = default;
};

enum class VerbClass { kManner, kPath, kGeneric };

// Atomic action labels of the transition system.
enum class Action { kRoll, kSlide, kBounce, kFly, kMove };

enum class ContactProfile { kAlwaysEC, kAlwaysDC, kAlternating, kUnconstrained };
enum class RotationCoupling { kArcLength, kNone, kUnconstrained };

// How the theme relates to the floor and how its rotation relates to its
// path while the action is iterated.
struct MannerProfile {
  ContactProfile floor_contact = ContactProfile::kUnconstrained;
  RotationCoupling rotation_coupling = RotationCoupling::kUnconstrained;

  bool operator==(const MannerProfile &) const = default;
};

enum class PathKind { kArrive, kLeave };
enum class Prep { kTo, kFrom, kTowards, kAt };

struct VerbEntry {
  std::string lemma;
  std::vector<std::string> past_forms;
  VerbClass verb_class = VerbClass::kManner;
  Action tick_action = Action::kMove;
  MannerProfile profile;
  std::optional<PathKind> path_kind;
  std::vector<Prep> allowed_preps;

  bool Allows(Prep prep) const;
  bool operator==(const VerbEntry &) const = default;
};

// The fixed profile carried by each atomic action.
MannerProfile ProfileForAction(Action action);

// Names used in documents, traces and diagnostics.
std::string_view ShapeName(Shape shape);
std::string_view AxisName(Axis axis);
std::string_view VerbClassName(VerbClass c);
std::string_view ActionName(Action action);
std::string_view ContactProfileName(ContactProfile p);
std::string_view RotationCouplingName(RotationCoupling r);
std::string_view PathKindName(PathKind k);
std::string_view PrepName(Prep prep);

std::optional<Shape> ParseShape(std::string_view name);
std::optional<Axis> ParseAxis(std::string_view name);
std::optional<VerbClass> ParseVerbClass(std::string_view name);
std::optional<Action> ParseAction(std::string_view name);
std::optional<ContactProfile> ParseContactProfile(std::string_view name);
std::optional<RotationCoupling> ParseRotationCoupling(std::string_view name);
std::optional<PathKind> ParsePathKind(std::string_view name);
std::optional<Prep> ParsePrep(std::string_view name);

// Noun and verb knowledge. Immutable once built; lookups are case-folded.
class Lexicon {
 public:
  // Inserts or replaces an entry after checking its invariants. Throws
  // LexiconFormatError (line 0) on invariant violations and
  // DuplicateEntryError if a verb form would become ambiguous.
  void PutNoun(NounEntry entry);
  void PutVerb(VerbEntry entry);

  const NounEntry *FindNoun(std::string_view lemma) const;
  const VerbEntry *FindVerb(std::string_view lemma) const;
  const VerbEntry *FindVerbByForm(std::string_view surface) const;

  // Throwing variants; UnknownWordError carries the token.
  const NounEntry &LookupNoun(std::string_view lemma) const;
  const VerbEntry &LookupVerbByForm(std::string_view surface) const;

  const std::map<std::string, NounEntry> &nouns() const { return nouns_; }
  const std::map<std::string, VerbEntry> &verbs() const { return verbs_; }
  size_t size() const { return nouns_.size() + verbs_.size(); }

  bool operator==(const Lexicon &o) const { return nouns_ == o.nouns_ && verbs_ == o.verbs_; }

 private:
  void RebuildForms();

  std::map<std::string, NounEntry> nouns_;
  std::map<std::string, VerbEntry> verbs_;
  std::map<std::string, std::string> forms_;  // surface form -> verb lemma
};

// Checks type invariants; returns the offending field and reason, if any.
struct InvariantViolation {
  std::string field;
  std::string reason;
};
std::optional<InvariantViolation> CheckNoun(const NounEntry &noun);
std::optional<InvariantViolation> CheckVerb(const VerbEntry &verb);

// Nouns {ball, block, bird, wall, floor} and verbs {roll, slide, bounce, fly,
// move, arrive, leave}.
Lexicon BuiltinLexicon();

// Parses a JSON lexicon document and merges it over the builtin lexicon.
// Throws LexiconFormatError or DuplicateEntryError.
Lexicon LoadLexicon(std::string_view document);
Lexicon LoadLexiconFile(const std::string &path);

// Serializes every entry in the schema accepted by LoadLexicon.
std::string SerializeLexicon(const Lexicon &lexicon);

std::string FoldCase(std::string_view s);

}  // namespace mosim

#endif  // MOSIM_LEXICON_H_
