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

#include "mosim/verify.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "mosim/errors.h"

namespace mosim {

namespace {

std::string Fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

CheckResult Pass(std::string_view name, std::string detail = "") {
  return {std::string(name), true, std::nullopt, std::move(detail)};
}

CheckResult Fail(std::string_view name, std::optional<size_t> frame, std::string detail) {
  return {std::string(name), false, frame, std::move(detail)};
}

std::vector<Relation> FloorRelations(const Trace &trace, const Scene &scene) {
  std::vector<Relation> rels;
  for (size_t i = 1; i < trace.states.size(); ++i) {
    const WorldState &s = trace.states[i];
    rels.push_back(ContactRelation(s.Get(scene.theme), *s.Floor(), s.physics.contact_eps));
  }
  return rels;
}

int CountRuns(const std::vector<Relation> &rels, Relation r) {
  int runs = 0;
  for (size_t i = 0; i < rels.size(); ++i) {
    if (rels[i] == r && (i == 0 || rels[i - 1] != r)) ++runs;
  }
  return runs;
}

CheckResult CheckContact(const Trace &trace, const Scene &scene, ContactProfile profile) {
  constexpr std::string_view kName = "contact_profile";
  if (profile == ContactProfile::kUnconstrained) return Pass(kName, "unconstrained");
  if (trace.TickCount() == 0) return Pass(kName, "no motion");
  const std::vector<Relation> rels = FloorRelations(trace, scene);
  if (profile == ContactProfile::kAlternating) {
    // Contact episodes separated by at least one DC state.
    int episodes = 0;
    bool separated = true;
    for (size_t i = 0; i < rels.size(); ++i) {
      if (rels[i] == Relation::kDC) separated = true;
      if (rels[i] == Relation::kEC && (i == 0 || rels[i - 1] != Relation::kEC)) {
        if (separated || episodes == 0) ++episodes;
        separated = false;
      }
    }
    if (episodes >= 2) return Pass(kName, std::to_string(episodes) + " floor contact episodes");
    return Fail(kName, std::nullopt,
                "alternating contact needs >= 2 floor contact episodes, found " +
                    std::to_string(episodes));
  }
  const Relation want =
      profile == ContactProfile::kAlwaysEC ? Relation::kEC : Relation::kDC;
  for (size_t i = 0; i < rels.size(); ++i) {
    if (rels[i] != want) {
      return Fail(kName, i + 1,
                  "floor relation is " + std::string(RelationName(rels[i])) + ", expected " +
                      std::string(RelationName(want)));
    }
  }
  return Pass(kName, "floor " + std::string(RelationName(want)) + " in every post-tick state");
}

CheckResult CheckRotation(const TraceMetrics &m, const Body &theme, RotationCoupling coupling) {
  constexpr std::string_view kName = "rotation_coupling";
  switch (coupling) {
    case RotationCoupling::kUnconstrained:
      return Pass(kName, "unconstrained");
    case RotationCoupling::kNone:
      if (std::abs(m.net_rotation) <= kNoRotationTolerance) return Pass(kName, "no rotation");
      return Fail(kName, std::nullopt, "net rotation " + Fmt(m.net_rotation) + " rad, expected 0");
    case RotationCoupling::kArcLength: {
      const double r = RollingRadius(theme);
      const double expected = r > 0.0 ? m.path_length / r : 0.0;
      const double error = std::abs(m.net_rotation - expected);
      if (error <= kArcLengthTolerance) {
        return Pass(kName, "rotation matches path length / radius (error " + Fmt(error) + " rad)");
      }
      return Fail(kName, std::nullopt,
                  "net rotation " + Fmt(m.net_rotation) + " rad, path length / radius " +
                      Fmt(expected) + " rad");
    }
  }
  return Pass(kName);
}

CheckResult Lift(std::string_view name, const TraceCheck &c) {
  return {std::string(name), c.passed, c.passed ? std::nullopt : c.offending, c.detail};
}

enum class PathRole { kNone, kGoal, kSource, kDirection };

PathRole RoleOf(const VerbEntry &verb, const EventFrame &frame) {
  if (!frame.path) return PathRole::kNone;
  if (verb.verb_class == VerbClass::kPath) {
    return *verb.path_kind == PathKind::kArrive ? PathRole::kGoal : PathRole::kSource;
  }
  switch (frame.path->prep) {
    case Prep::kFrom:
      return PathRole::kSource;
    case Prep::kTowards:
      return PathRole::kDirection;
    case Prep::kTo:
    case Prep::kAt:
      return PathRole::kGoal;
  }
  return PathRole::kNone;
}

void CheckFits(const Trace &trace, const EventFrame &frame, const Scene &scene) {
  if (trace.states.empty()) throw TraceSceneMismatch("trace has no states");
  if (trace.states.size() != trace.labels.size() + 1) {
    throw TraceSceneMismatch("trace has " + std::to_string(trace.states.size()) + " states but " +
                             std::to_string(trace.labels.size()) + " labels");
  }
  if (frame.ThemeId() != scene.theme) {
    throw TraceSceneMismatch("frame theme '" + frame.theme + "' is not the scene theme '" +
                             scene.theme + "'");
  }
  if (frame.path) {
    if (!scene.ground) throw TraceSceneMismatch("frame has a ground but the scene has none");
    const Body *g = scene.initial.Find(*scene.ground);
    if (g == nullptr || g->noun != frame.path->ground) {
      throw TraceSceneMismatch("frame ground '" + frame.path->ground +
                               "' is not the scene ground");
    }
  }
  for (size_t i = 0; i < trace.states.size(); ++i) {
    const WorldState &s = trace.states[i];
    if (s.Find(scene.theme) == nullptr || s.Floor() == nullptr ||
        (scene.ground && s.Find(*scene.ground) == nullptr)) {
      throw TraceSceneMismatch("state " + std::to_string(i) + " lacks a scene object");
    }
  }
}

}  // namespace

TraceCheck CheckFormulaOnTrace(const Trace &trace, const Formula &f, CheckMode mode) {
  if (f.ContainsDiamond()) throw DiamondNotAllowed();
  if (trace.states.empty()) return {false, std::nullopt, "empty trace"};
  size_t first = 0;
  size_t last = trace.states.size() - 1;
  if (mode == CheckMode::kInitially) last = 0;
  if (mode == CheckMode::kFinally) first = last;
  for (size_t i = first; i <= last; ++i) {
    try {
      if (!EvalFormula(f, trace.states[i], 0).value) {
        return {false, i, ToText(f) + " is false at state " + std::to_string(i)};
      }
    } catch (const UnboundObjectError &e) {
      return {false, i, e.what()};
    }
  }
  return {true, std::nullopt, ToText(f) + " holds"};
}

TraceMetrics MeasureTrace(const Trace &trace, const Scene &scene) {
  TraceMetrics m;
  for (size_t i = 1; i < trace.states.size(); ++i) {
    const Vec3 d = trace.states[i].Get(scene.theme).position -
                   trace.states[i - 1].Get(scene.theme).position;
    m.path_length += d.Horizontal().Norm();
  }
  m.net_rotation =
      trace.final().Get(scene.theme).rotation - trace.initial().Get(scene.theme).rotation;
  m.contact_intervals = CountRuns(FloorRelations(trace, scene), Relation::kEC);
  return m;
}

const CheckResult &VerificationReport::Get(std::string_view name) const {
  for (const CheckResult &c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + std::string(name));
}

std::string VerificationReport::ToJson() const {
  nlohmann::ordered_json j;
  j["overall"] = overall ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult &c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.passed;
    e["frame"] = c.frame ? nlohmann::ordered_json(*c.frame) : nlohmann::ordered_json();
    e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  j["metrics"] = {{"path_length", metrics.path_length},
                  {"net_rotation", metrics.net_rotation},
                  {"contact_intervals", metrics.contact_intervals}};
  return j.dump();
}

std::string VerificationReport::ToText() const {
  std::ostringstream out;
  out << "verification: " << (overall ? "PASS" : "FAIL") << "\n";
  for (const CheckResult &c : checks) {
    out << "  " << (c.passed ? "pass " : "FAIL ") << c.name;
    if (c.frame) out << " @frame " << *c.frame;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

VerificationReport VerifyTrace(const Trace &trace, const EventFrame &frame, const Scene &scene,
                               const Lexicon &lex) {
  const VerbEntry *verb = lex.FindVerb(frame.verb);
  if (verb == nullptr) throw UnknownWordError(frame.verb);
  CheckFits(trace, frame, scene);

  VerificationReport report;
  report.metrics = MeasureTrace(trace, scene);
  const Body &theme = trace.initial().Get(scene.theme);

  report.checks.push_back(CheckContact(trace, scene, verb->profile.floor_contact));
  report.checks.push_back(CheckRotation(report.metrics, theme, verb->profile.rotation_coupling));

  const PathRole role = RoleOf(*verb, frame);
  if (role == PathRole::kNone) {
    report.checks.push_back(Pass("path_initial", "no path component"));
    report.checks.push_back(Pass("path_final", "no path component"));
  } else {
    const std::string &ground = *scene.ground;
    const Formula at = Formula::At(scene.theme, ground);
    switch (role) {
      case PathRole::kGoal:
        if (trace.TickCount() == 0) {
          report.checks.push_back(Pass("path_initial", "zero motion: goal reached initially"));
        } else {
          report.checks.push_back(
              Lift("path_initial", CheckFormulaOnTrace(trace, Formula::Not(at), CheckMode::kInitially)));
        }
        report.checks.push_back(Lift("path_final", CheckFormulaOnTrace(trace, at, CheckMode::kFinally)));
        break;
      case PathRole::kSource:
        report.checks.push_back(Lift("path_initial", CheckFormulaOnTrace(trace, at, CheckMode::kInitially)));
        report.checks.push_back(
            Lift("path_final", CheckFormulaOnTrace(trace, Formula::Not(at), CheckMode::kFinally)));
        break;
      case PathRole::kDirection: {
        report.checks.push_back(Pass("path_initial", "directional path: no initial test"));
        const double before =
            SurfaceDistance(trace.initial().Get(scene.theme), trace.initial().Get(ground));
        const double after =
            SurfaceDistance(trace.final().Get(scene.theme), trace.final().Get(ground));
        if (after <= before) {
          report.checks.push_back(Pass("path_final", "gap to ground shrank from " + Fmt(before) +
                                                         " to " + Fmt(after) + " m"));
        } else {
          report.checks.push_back(Fail("path_final", trace.states.size() - 1,
                                       "gap to ground grew from " + Fmt(before) + " to " +
                                           Fmt(after) + " m"));
        }
        break;
      }
      case PathRole::kNone:
        break;
    }
  }

  // Integrity.
  std::optional<CheckResult> overlap;
  for (size_t i = 0; i < trace.states.size() && !overlap; ++i) {
    const WorldState &s = trace.states[i];
    for (size_t a = 0; a < s.bodies.size() && !overlap; ++a) {
      for (size_t b = a + 1; b < s.bodies.size(); ++b) {
        const Body &x = s.bodies[a];
        const Body &y = s.bodies[b];
        if (x.shape == Shape::kPlane && y.shape == Shape::kPlane) continue;
        if (ContactRelation(x, y, s.physics.contact_eps) == Relation::kPO) {
          overlap = Fail("no_overlap", i, x.id + " and " + y.id + " overlap (PO)");
          break;
        }
      }
    }
  }
  report.checks.push_back(overlap ? *overlap : Pass("no_overlap"));

  std::optional<CheckResult> timing;
  for (size_t i = 0; i < trace.states.size(); ++i) {
    const double expected = trace.InstantOf(i);
    if (std::abs(trace.states[i].time - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
      timing = Fail("uniform_time", i,
                    "state time " + Fmt(trace.states[i].time) + " s, expected " + Fmt(expected));
      break;
    }
  }
  if (!timing && !(trace.dt > 0.0) && trace.TickCount() > 0) {
    timing = Fail("uniform_time", std::nullopt, "non-positive step");
  }
  report.checks.push_back(timing ? *timing : Pass("uniform_time"));

  report.overall = true;
  for (const CheckResult &c : report.checks) report.overall = report.overall && c.passed;
  return report;
}

}  // namespace mosim
