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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "mosim/errors.h"

namespace mosim {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

template <typename E, size_t N>
std::optional<E> FindByName(const std::pair<E, std::string_view> (&table)[N],
                            std::string_view name) {
  for (const auto &[value, n] : table) {
    if (n == name) return value;
  }
  return std::nullopt;
}

template <typename E, size_t N>
std::string_view NameOf(const std::pair<E, std::string_view> (&table)[N], E value) {
  for (const auto &[v, n] : table) {
    if (v == value) return n;
  }
  return "?";
}

const std::pair<Shape, std::string_view> kShapes[] = {
    {Shape::kSphere, "sphere"}, {Shape::kBox, "box"}, {Shape::kPlane, "plane"}};
const std::pair<Axis, std::string_view> kAxes[] = {
    {Axis::kX, "x"}, {Axis::kY, "y"}, {Axis::kZ, "z"}};
const std::pair<VerbClass, std::string_view> kClasses[] = {
    {VerbClass::kManner, "manner"}, {VerbClass::kPath, "path"}, {VerbClass::kGeneric, "generic"}};
const std::pair<Action, std::string_view> kActions[] = {
    {Action::kRoll, "roll"},   {Action::kSlide, "slide"}, {Action::kBounce, "bounce"},
    {Action::kFly, "fly"},     {Action::kMove, "move"}};
const std::pair<ContactProfile, std::string_view> kContacts[] = {
    {ContactProfile::kAlwaysEC, "always_EC"},
    {ContactProfile::kAlwaysDC, "always_DC"},
    {ContactProfile::kAlternating, "alternating"},
    {ContactProfile::kUnconstrained, "unconstrained"}};
const std::pair<RotationCoupling, std::string_view> kCouplings[] = {
    {RotationCoupling::kArcLength, "arc_length"},
    {RotationCoupling::kNone, "none"},
    {RotationCoupling::kUnconstrained, "unconstrained"}};
const std::pair<PathKind, std::string_view> kPathKinds[] = {
    {PathKind::kArrive, "arrive"}, {PathKind::kLeave, "leave"}};
const std::pair<Prep, std::string_view> kPreps[] = {
    {Prep::kTo, "to"}, {Prep::kFrom, "from"}, {Prep::kTowards, "towards"}, {Prep::kAt, "at"}};

bool IsLowerWord(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

// Zeroes the dimension fields that the shape does not use so that equal
// geometry compares equal regardless of how it was written.
Dimensions Canonical(Shape shape, const Dimensions &d) {
  Dimensions out;
  switch (shape) {
    case Shape::kSphere:
      out.radius = d.radius;
      break;
    case Shape::kBox:
      out.width = d.width;
      out.height = d.height;
      out.depth = d.depth;
      break;
    case Shape::kPlane:
      out.normal = d.normal;
      break;
  }
  return out;
}

// Records the line on which every entry object of "nouns" and "verbs" starts
// so that schema errors can be reported by line.
struct EntryLines {
  std::vector<int> nouns;
  std::vector<int> verbs;
};

EntryLines ScanEntryLines(std::string_view text) {
  EntryLines lines;
  int line = 1;
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  std::string current;
  std::string last_top_key;
  bool collecting_key = false;
  for (char c : text) {
    if (c == '\n') ++line;
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
        if (collecting_key) last_top_key = current;
      } else {
        current.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_string = true;
        current.clear();
        collecting_key = (depth == 1);
        break;
      case '{':
      case '[':
        if (c == '{' && depth == 2) {
          if (last_top_key == "nouns") lines.nouns.push_back(line);
          if (last_top_key == "verbs") lines.verbs.push_back(line);
        }
        ++depth;
        break;
      case '}':
      case ']':
        --depth;
        break;
      default:
        break;
    }
  }
  return lines;
}

class EntryReader {
 public:
  EntryReader(const Json &obj, int line, std::string path)
      : obj_(obj), line_(line), path_(std::move(path)) {}

  [[noreturn]] void Fail(const std::string &field, const std::string &reason) const {
    throw LexiconFormatError(line_, path_ + "." + field, reason);
  }

  const Json *Get(const std::string &field, bool required) const {
    auto it = obj_.find(field);
    if (it == obj_.end() || it->is_null()) {
      if (required) Fail(field, "missing");
      return nullptr;
    }
    return &*it;
  }

  std::string String(const std::string &field) const {
    const Json *v = Get(field, true);
    if (!v->is_string()) Fail(field, "expected a string");
    return v->get<std::string>();
  }

  double Number(const Json &holder, const std::string &field, const std::string &label) const {
    auto it = holder.find(field);
    if (it == holder.end() || !it->is_number()) Fail(label, "expected a number");
    return it->get<double>();
  }

  bool Bool(const std::string &field) const {
    const Json *v = Get(field, true);
    if (!v->is_boolean()) Fail(field, "expected a boolean");
    return v->get<bool>();
  }

  template <typename E>
  E Enum(const Json &value, const std::string &field,
         std::optional<E> (*parse)(std::string_view)) const {
    if (!value.is_string()) Fail(field, "expected a string");
    auto parsed = parse(value.get<std::string>());
    if (!parsed) Fail(field, "unknown value '" + value.get<std::string>() + "'");
    return *parsed;
  }

  void RejectUnknownKeys(std::initializer_list<std::string_view> known) const {
    for (const auto &[key, value] : obj_.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        Fail(key, "unknown field");
      }
    }
  }

  int line() const { return line_; }
  const std::string &path() const { return path_; }

 private:
  const Json &obj_;
  int line_;
  std::string path_;
};

NounEntry ReadNoun(const Json &obj, int line, size_t index) {
  std::string path = "nouns[" + std::to_string(index) + "]";
  if (!obj.is_object()) throw LexiconFormatError(line, path, "expected an object");
  EntryReader r(obj, line, path);
  r.RejectUnknownKeys({"lemma", "shape", "dimensions", "mobile", "default_altitude"});
  NounEntry noun;
  noun.lemma = r.String("lemma");
  noun.shape = r.Enum<Shape>(*r.Get("shape", true), "shape", ParseShape);
  const Json *dims = r.Get("dimensions", true);
  if (!dims->is_object()) r.Fail("dimensions", "expected an object");
  switch (noun.shape) {
    case Shape::kSphere:
      noun.dimensions.radius = r.Number(*dims, "radius", "dimensions.radius");
      break;
    case Shape::kBox:
      noun.dimensions.width = r.Number(*dims, "width", "dimensions.width");
      noun.dimensions.height = r.Number(*dims, "height", "dimensions.height");
      noun.dimensions.depth = r.Number(*dims, "depth", "dimensions.depth");
      break;
    case Shape::kPlane: {
      auto it = dims->find("normal");
      if (it == dims->end()) r.Fail("dimensions.normal", "missing");
      noun.dimensions.normal = r.Enum<Axis>(*it, "dimensions.normal", ParseAxis);
      break;
    }
  }
  noun.mobile = r.Bool("mobile");
  if (const Json *alt = r.Get("default_altitude", false)) {
    if (!alt->is_number()) r.Fail("default_altitude", "expected a number");
    noun.default_altitude = alt->get<double>();
  }
  if (auto bad = CheckNoun(noun)) r.Fail(bad->field, bad->reason);
  return noun;
}

VerbEntry ReadVerb(const Json &obj, int line, size_t index) {
  std::string path = "verbs[" + std::to_string(index) + "]";
  if (!obj.is_object()) throw LexiconFormatError(line, path, "expected an object");
  EntryReader r(obj, line, path);
  r.RejectUnknownKeys({"lemma", "past_forms", "class", "tick_action", "profile", "path_kind",
                       "allowed_preps"});
  VerbEntry verb;
  verb.lemma = r.String("lemma");
  const Json *forms = r.Get("past_forms", true);
  if (!forms->is_array()) r.Fail("past_forms", "expected an array");
  for (const Json &f : *forms) {
    if (!f.is_string()) r.Fail("past_forms", "expected strings");
    verb.past_forms.push_back(f.get<std::string>());
  }
  verb.verb_class = r.Enum<VerbClass>(*r.Get("class", true), "class", ParseVerbClass);
  const bool needs_action = verb.verb_class != VerbClass::kPath;
  if (const Json *action = r.Get("tick_action", needs_action)) {
    verb.tick_action = r.Enum<Action>(*action, "tick_action", ParseAction);
  }
  if (const Json *profile = r.Get("profile", false)) {
    if (!profile->is_object()) r.Fail("profile", "expected an object");
    auto fc = profile->find("floor_contact");
    auto rc = profile->find("rotation_coupling");
    if (fc == profile->end()) r.Fail("profile.floor_contact", "missing");
    if (rc == profile->end()) r.Fail("profile.rotation_coupling", "missing");
    verb.profile.floor_contact =
        r.Enum<ContactProfile>(*fc, "profile.floor_contact", ParseContactProfile);
    verb.profile.rotation_coupling =
        r.Enum<RotationCoupling>(*rc, "profile.rotation_coupling", ParseRotationCoupling);
  } else {
    verb.profile = ProfileForAction(verb.tick_action);
  }
  if (const Json *kind = r.Get("path_kind", false)) {
    verb.path_kind = r.Enum<PathKind>(*kind, "path_kind", ParsePathKind);
  }
  if (const Json *preps = r.Get("allowed_preps", false)) {
    if (!preps->is_array()) r.Fail("allowed_preps", "expected an array");
    for (const Json &p : *preps) {
      verb.allowed_preps.push_back(r.Enum<Prep>(p, "allowed_preps", ParsePrep));
    }
  }
  if (auto bad = CheckVerb(verb)) r.Fail(bad->field, bad->reason);
  return verb;
}

VerbEntry MakeVerb(std::string lemma, std::vector<std::string> past, VerbClass cls,
                   Action action, std::optional<PathKind> kind, std::vector<Prep> preps) {
  VerbEntry v;
  v.lemma = std::move(lemma);
  v.past_forms = std::move(past);
  v.verb_class = cls;
  v.tick_action = action;
  v.profile = ProfileForAction(action);
  v.path_kind = kind;
  v.allowed_preps = std::move(preps);
  return v;
}

NounEntry MakeSphere(std::string lemma, double radius, double altitude = 0.0) {
  NounEntry n;
  n.lemma = std::move(lemma);
  n.shape = Shape::kSphere;
  n.dimensions.radius = radius;
  n.mobile = true;
  n.default_altitude = altitude;
  return n;
}

NounEntry MakeBox(std::string lemma, double width, double height, double depth, bool mobile) {
  NounEntry n;
  n.lemma = std::move(lemma);
  n.shape = Shape::kBox;
  n.dimensions.width = width;
  n.dimensions.height = height;
  n.dimensions.depth = depth;
  n.mobile = mobile;
  return n;
}

}  // namespace

std::string_view ShapeName(Shape v) { return NameOf(kShapes, v); }
std::string_view AxisName(Axis v) { return NameOf(kAxes, v); }
std::string_view VerbClassName(VerbClass v) { return NameOf(kClasses, v); }
std::string_view ActionName(Action v) { return NameOf(kActions, v); }
std::string_view ContactProfileName(ContactProfile v) { return NameOf(kContacts, v); }
std::string_view RotationCouplingName(RotationCoupling v) { return NameOf(kCouplings, v); }
std::string_view PathKindName(PathKind v) { return NameOf(kPathKinds, v); }
std::string_view PrepName(Prep v) { return NameOf(kPreps, v); }

std::optional<Shape> ParseShape(std::string_view n) { return FindByName(kShapes, n); }
std::optional<Axis> ParseAxis(std::string_view n) { return FindByName(kAxes, n); }
std::optional<VerbClass> ParseVerbClass(std::string_view n) { return FindByName(kClasses, n); }
std::optional<Action> ParseAction(std::string_view n) { return FindByName(kActions, n); }
std::optional<ContactProfile> ParseContactProfile(std::string_view n) {
  return FindByName(kContacts, n);
}
std::optional<RotationCoupling> ParseRotationCoupling(std::string_view n) {
  return FindByName(kCouplings, n);
}
std::optional<PathKind> ParsePathKind(std::string_view n) { return FindByName(kPathKinds, n); }
std::optional<Prep> ParsePrep(std::string_view n) { return FindByName(kPreps, n); }

MannerProfile ProfileForAction(Action action) {
  switch (action) {
    case Action::kRoll:
      return {ContactProfile::kAlwaysEC, RotationCoupling::kArcLength};
    case Action::kSlide:
      return {ContactProfile::kAlwaysEC, RotationCoupling::kNone};
    case Action::kBounce:
      return {ContactProfile::kAlternating, RotationCoupling::kUnconstrained};
    case Action::kFly:
      return {ContactProfile::kAlwaysDC, RotationCoupling::kNone};
    case Action::kMove:
      // Generic translation: no contact check, and rolling or sliding
      // realizations are both acceptable.
      return {ContactProfile::kUnconstrained, RotationCoupling::kUnconstrained};
  }
  return {};
}

bool VerbEntry::Allows(Prep prep) const {
  return std::find(allowed_preps.begin(), allowed_preps.end(), prep) != allowed_preps.end();
}

std::string FoldCase(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<InvariantViolation> CheckNoun(const NounEntry &n) {
  if (!IsLowerWord(n.lemma)) return InvariantViolation{"lemma", "must be a lowercase word"};
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  switch (n.shape) {
    case Shape::kSphere:
      if (!positive(n.dimensions.radius)) {
        return InvariantViolation{"dimensions.radius", "must be strictly positive"};
      }
      break;
    case Shape::kBox:
      if (!positive(n.dimensions.width)) {
        return InvariantViolation{"dimensions.width", "must be strictly positive"};
      }
      if (!positive(n.dimensions.height)) {
        return InvariantViolation{"dimensions.height", "must be strictly positive"};
      }
      if (!positive(n.dimensions.depth)) {
        return InvariantViolation{"dimensions.depth", "must be strictly positive"};
      }
      break;
    case Shape::kPlane:
      if (n.mobile) return InvariantViolation{"mobile", "plane entries are immobile"};
      break;
  }
  if (!std::isfinite(n.default_altitude) || n.default_altitude < 0.0) {
    return InvariantViolation{"default_altitude", "must be non-negative"};
  }
  return std::nullopt;
}

std::optional<InvariantViolation> CheckVerb(const VerbEntry &v) {
  if (!IsLowerWord(v.lemma)) return InvariantViolation{"lemma", "must be a lowercase word"};
  if (v.past_forms.empty()) return InvariantViolation{"past_forms", "must be nonempty"};
  for (const auto &f : v.past_forms) {
    if (!IsLowerWord(f)) return InvariantViolation{"past_forms", "'" + f + "' is not a lowercase word"};
  }
  if (v.verb_class == VerbClass::kPath && !v.path_kind) {
    return InvariantViolation{"path_kind", "path verbs require a path_kind"};
  }
  if (v.verb_class != VerbClass::kPath && v.path_kind) {
    return InvariantViolation{"path_kind", "only path verbs carry a path_kind"};
  }
  if (v.profile != ProfileForAction(v.tick_action)) {
    return InvariantViolation{"profile", "does not match the profile of action '" +
                                             std::string(ActionName(v.tick_action)) + "'"};
  }
  return std::nullopt;
}

void Lexicon::PutNoun(NounEntry entry) {
  if (auto bad = CheckNoun(entry)) throw LexiconFormatError(0, bad->field, bad->reason);
  entry.dimensions = Canonical(entry.shape, entry.dimensions);
  std::string key = entry.lemma;
  nouns_[key] = std::move(entry);
}

void Lexicon::PutVerb(VerbEntry entry) {
  if (auto bad = CheckVerb(entry)) throw LexiconFormatError(0, bad->field, bad->reason);
  std::sort(entry.allowed_preps.begin(), entry.allowed_preps.end());
  entry.allowed_preps.erase(std::unique(entry.allowed_preps.begin(), entry.allowed_preps.end()),
                            entry.allowed_preps.end());
  std::string key = entry.lemma;
  std::optional<VerbEntry> previous;
  if (auto it = verbs_.find(key); it != verbs_.end()) previous = it->second;
  verbs_[key] = std::move(entry);
  try {
    RebuildForms();
  } catch (...) {
    if (previous) {
      verbs_[key] = std::move(*previous);
    } else {
      verbs_.erase(key);
    }
    RebuildForms();
    throw;
  }
}

void Lexicon::RebuildForms() {
  std::map<std::string, std::string> forms;
  for (const auto &[lemma, verb] : verbs_) {
    auto add = [&](const std::string &form) {
      auto [it, inserted] = forms.emplace(form, lemma);
      if (!inserted && it->second != lemma) throw DuplicateEntryError(form);
    };
    add(lemma);
    for (const auto &f : verb.past_forms) add(f);
  }
  forms_ = std::move(forms);
}

const NounEntry *Lexicon::FindNoun(std::string_view lemma) const {
  auto it = nouns_.find(FoldCase(lemma));
  return it == nouns_.end() ? nullptr : &it->second;
}

const VerbEntry *Lexicon::FindVerb(std::string_view lemma) const {
  auto it = verbs_.find(FoldCase(lemma));
  return it == verbs_.end() ? nullptr : &it->second;
}

const VerbEntry *Lexicon::FindVerbByForm(std::string_view surface) const {
  auto it = forms_.find(FoldCase(surface));
  return it == forms_.end() ? nullptr : FindVerb(it->second);
}

const NounEntry &Lexicon::LookupNoun(std::string_view lemma) const {
  if (const NounEntry *n = FindNoun(lemma)) return *n;
  throw UnknownWordError(std::string(lemma));
}

const VerbEntry &Lexicon::LookupVerbByForm(std::string_view surface) const {
  if (const VerbEntry *v = FindVerbByForm(surface)) return *v;
  throw UnknownWordError(std::string(surface));
}

Lexicon BuiltinLexicon() {
  Lexicon lex;
  lex.PutNoun(MakeSphere("ball", 0.5));
  lex.PutNoun(MakeBox("block", 1.0, 1.0, 1.0, true));
  lex.PutNoun(MakeSphere("bird", 0.2, 1.5));
  lex.PutNoun(MakeBox("wall", 4.0, 2.0, 0.2, false));
  NounEntry floor;
  floor.lemma = "floor";
  floor.shape = Shape::kPlane;
  floor.dimensions.normal = Axis::kY;
  floor.mobile = false;
  lex.PutNoun(floor);

  const std::vector<Prep> manner_preps = {Prep::kTo, Prep::kFrom, Prep::kTowards};
  lex.PutVerb(MakeVerb("roll", {"rolled"}, VerbClass::kManner, Action::kRoll, {}, manner_preps));
  lex.PutVerb(MakeVerb("slide", {"slid"}, VerbClass::kManner, Action::kSlide, {}, manner_preps));
  lex.PutVerb(
      MakeVerb("bounce", {"bounced"}, VerbClass::kManner, Action::kBounce, {}, manner_preps));
  lex.PutVerb(MakeVerb("fly", {"flew"}, VerbClass::kManner, Action::kFly, {}, manner_preps));
  lex.PutVerb(MakeVerb("move", {"moved"}, VerbClass::kGeneric, Action::kMove, {}, manner_preps));
  lex.PutVerb(MakeVerb("arrive", {"arrived"}, VerbClass::kPath, Action::kMove, PathKind::kArrive,
                       {Prep::kAt}));
  lex.PutVerb(MakeVerb("leave", {"left"}, VerbClass::kPath, Action::kMove, PathKind::kLeave,
                       {Prep::kFrom}));
  return lex;
}

Lexicon LoadLexicon(std::string_view document) {
  Json root;
  try {
    root = Json::parse(document);
  } catch (const Json::parse_error &e) {
    int line = 1 + static_cast<int>(std::count(
                       document.begin(),
                       document.begin() + std::min(e.byte, document.size()), '\n'));
    throw LexiconFormatError(line, "<document>", "malformed JSON");
  }
  if (!root.is_object()) throw LexiconFormatError(1, "<document>", "expected an object");
  for (const auto &[key, value] : root.items()) {
    if (key != "nouns" && key != "verbs") throw LexiconFormatError(1, key, "unknown field");
  }
  const EntryLines lines = ScanEntryLines(document);
  auto line_of = [](const std::vector<int> &ls, size_t i) {
    return i < ls.size() ? ls[i] : 0;
  };

  std::vector<NounEntry> nouns;
  std::vector<VerbEntry> verbs;
  if (auto it = root.find("nouns"); it != root.end()) {
    if (!it->is_array()) throw LexiconFormatError(1, "nouns", "expected an array");
    for (size_t i = 0; i < it->size(); ++i) {
      nouns.push_back(ReadNoun((*it)[i], line_of(lines.nouns, i), i));
    }
  }
  if (auto it = root.find("verbs"); it != root.end()) {
    if (!it->is_array()) throw LexiconFormatError(1, "verbs", "expected an array");
    for (size_t i = 0; i < it->size(); ++i) {
      verbs.push_back(ReadVerb((*it)[i], line_of(lines.verbs, i), i));
    }
  }

  std::vector<std::string> seen;
  auto check_unique = [&seen](const std::string &lemma) {
    if (std::find(seen.begin(), seen.end(), lemma) != seen.end()) {
      throw DuplicateEntryError(lemma);
    }
    seen.push_back(lemma);
  };
  for (const auto &n : nouns) check_unique(n.lemma);
  seen.clear();
  for (const auto &v : verbs) check_unique(v.lemma);

  Lexicon lex = BuiltinLexicon();
  for (auto &n : nouns) lex.PutNoun(std::move(n));
  for (auto &v : verbs) lex.PutVerb(std::move(v));
  return lex;
}

Lexicon LoadLexiconFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconFormatError(0, "<file>", "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadLexicon(buffer.str());
}

std::string SerializeLexicon(const Lexicon &lexicon) {
  OrderedJson root;
  root["nouns"] = OrderedJson::array();
  root["verbs"] = OrderedJson::array();
  for (const auto &[lemma, n] : lexicon.nouns()) {
    OrderedJson e;
    e["lemma"] = n.lemma;
    e["shape"] = ShapeName(n.shape);
    OrderedJson dims = OrderedJson::object();
    switch (n.shape) {
      case Shape::kSphere:
        dims["radius"] = n.dimensions.radius;
        break;
      case Shape::kBox:
        dims["width"] = n.dimensions.width;
        dims["height"] = n.dimensions.height;
        dims["depth"] = n.dimensions.depth;
        break;
      case Shape::kPlane:
        dims["normal"] = AxisName(n.dimensions.normal);
        break;
    }
    e["dimensions"] = dims;
    e["mobile"] = n.mobile;
    e["default_altitude"] = n.default_altitude;
    root["nouns"].push_back(e);
  }
  for (const auto &[lemma, v] : lexicon.verbs()) {
    OrderedJson e;
    e["lemma"] = v.lemma;
    e["past_forms"] = v.past_forms;
    e["class"] = VerbClassName(v.verb_class);
    e["tick_action"] = ActionName(v.tick_action);
    e["profile"] = {{"floor_contact", ContactProfileName(v.profile.floor_contact)},
                    {"rotation_coupling", RotationCouplingName(v.profile.rotation_coupling)}};
    e["path_kind"] = v.path_kind ? OrderedJson(PathKindName(*v.path_kind)) : OrderedJson();
    OrderedJson preps = OrderedJson::array();
    for (Prep p : v.allowed_preps) preps.push_back(PrepName(p));
    e["allowed_preps"] = preps;
    root["verbs"].push_back(e);
  }
  return root.dump(2) + "\n";
}

}  // namespace mosim
