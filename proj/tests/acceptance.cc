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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. With arguments, runs only the named
// criteria (e.g. `acceptance A1 A5`).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mosim/cli.h"
#include "mosim/errors.h"
#include "mosim/kinematics.h"
#include "mosim/trace_io.h"
#include "mosim/verify.h"
#include "test_util.h"

namespace mosim {
namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void Fail(const std::string &why) {
    if (passed) detail = why;
    passed = false;
  }
};

int Cli(const std::vector<std::string> &args, std::string *out = nullptr) {
  std::ostringstream o, e;
  const int code = RunCli(args, o, e);
  if (out != nullptr) *out = o.str() + e.str();
  return code;
}

// Horizontal path length and net rotation of the theme, recomputed from the
// serialized poses.
struct FileMetrics {
  double path = 0.0;
  double rotation = 0.0;
};

FileMetrics Measure(const TraceFile &f, const std::string &id) {
  FileMetrics m;
  const BodyPose *prev = nullptr;
  for (const TraceRecord &r : f.records) {
    for (const BodyPose &p : r.bodies) {
      if (p.id != id) continue;
      if (prev != nullptr) {
        const double dx = p.position.x - prev->position.x;
        const double dz = p.position.z - prev->position.z;
        m.path += std::sqrt(dx * dx + dz * dz);
      }
      prev = &p;
    }
  }
  m.rotation = f.records.back().bodies.front().rotation - f.records.front().bodies.front().rotation;
  return m;
}

constexpr char kExample[] = "the ball rolled to the wall";

// --- A1 ---------------------------------------------------------------------

Outcome RunningExample(const std::filesystem::path &dir) {
  Outcome o;
  const std::string path = (dir / "a1.jsonl").string();
  std::string text;
  const int code = Cli({"simulate", kExample, "--seed", "42", "--verify", "--out", path}, &text);
  if (code != 0) {
    o.Fail("exit code " + std::to_string(code) + ": " + text);
    return o;
  }
  const TraceFile f = ReadTrace(testing::Slurp(path));
  if (!f.records.back().goal || *f.records.back().goal != Relation::kEC) {
    o.Fail("final state is not EC(ball, wall)");
  }
  for (size_t i = 1; i < f.records.size(); ++i) {
    if (f.records[i].floor != Relation::kEC) o.Fail("state " + std::to_string(i) + " leaves the floor");
  }
  const FileMetrics m = Measure(f, "ball");
  const double err = std::abs(m.rotation - m.path / 0.5);
  if (err > 1e-4) o.Fail("rotation error " + std::to_string(err) + " rad");
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%zu ticks, path %.6f m, rotation error %.2e rad",
                f.records.size() - 1, m.path, err);
  if (o.passed) o.detail = buf;
  return o;
}

// --- A2 ---------------------------------------------------------------------

Outcome Corpus(const std::filesystem::path &dir) {
  const std::vector<std::string> corpus = {
      "the ball rolled",          "the ball rolled to the wall", "the ball rolled from the wall",
      "the ball slid",            "the ball slid to the wall",   "the ball bounced",
      "the bird flew",            "the bird flew to the wall",   "the ball moved",
      "the ball moved to the wall", "the ball arrived at the wall", "the ball left"};
  Outcome o;
  int runs = 0;
  for (const std::string &sentence : corpus) {
    for (const char *seed : {"0", "1", "42"}) {
      std::string text;
      const std::string path = (dir / "a2.jsonl").string();
      if (Cli({"parse", sentence}, &text) != 0) o.Fail("parse failed: " + sentence);
      const int code = Cli({"simulate", sentence, "--seed", seed, "--verify", "--out", path}, &text);
      if (code != 0) o.Fail("'" + sentence + "' seed " + seed + " exit " + std::to_string(code));
      ++runs;
    }
  }
  struct Negative {
    std::string sentence;
    std::string kind;
  };
  const Lexicon lex = BuiltinLexicon();
  for (const Negative &n : std::vector<Negative>{{"the wall rolled", "ImmobileThemeError"},
                                                 {"the ball rolled the wall", "GrammarError"},
                                                 {"the zorp rolled", "UnknownWordError"}}) {
    std::string kind = "no error";
    try {
      testing::Simulate(n.sentence);
    } catch (const Error &e) {
      kind = e.kind();
    }
    if (kind != n.kind) o.Fail("'" + n.sentence + "' raised " + kind + ", expected " + n.kind);
  }
  if (o.passed) o.detail = std::to_string(runs) + " runs verified, 3 negatives rejected";
  return o;
}

// --- A3 ---------------------------------------------------------------------

// Random programs over a single ball: ticks, tests and rotation assignments.
class ProgramGen {
 public:
  explicit ProgramGen(uint64_t seed) : rng_(seed) {}

  Program Make() {
    choices_ = 0;
    stars_ = 0;
    return Gen(3);
  }

  int Budget() { return static_cast<int>(rng_.UniformInt(0, 20)); }

 private:
  Program Gen(int depth) {
    const int64_t pick = rng_.UniformInt(0, depth > 0 ? 8 : 3);
    const Attr rot{"ball", AttrName::kRot};
    switch (pick) {
      case 0:
        return Program::Tick(Action::kRoll, "ball");
      case 1:
        return Program::Tick(Action::kSlide, "ball");
      case 2:
        return Program::Test(
            Formula::Leq(Term::Of(rot), Term::Scalar(0.05 * rng_.UniformInt(0, 8))));
      case 3:
        return rng_.Coin() ? Program::Assign(rot, Term::Scalar(0.0))
                           : Program::DirectedAssign(rot, Term::Scalar(0.0));
      case 4:
      case 5:
        return Program::Seq(Gen(depth - 1), Gen(depth - 1));
      case 6:
        if (choices_ < 3) {
          ++choices_;
          return Program::Choice(Gen(depth - 1), Gen(depth - 1));
        }
        return Gen(depth - 1);
      default:
        // Nested stars multiply equivalent unfoldings past the search cap.
        if (stars_ < 2) {
          ++stars_;
          return Program::Star(Gen(depth - 1), static_cast<int>(rng_.UniformInt(1, 4)));
        }
        return Gen(depth - 1);
    }
  }

  Rng rng_;
  int choices_ = 0;
  int stars_ = 0;
};

Outcome OracleEquivalence() {
  const Lexicon lex = BuiltinLexicon();
  WorldState s0;
  Body ball = MakeBody("ball", *lex.FindNoun("ball"));
  ball.position = {0.0, 0.5, 0.0};
  s0.bodies.push_back(ball);

  Outcome o;
  ProgramGen gen(2026);
  int executed = 0, empty = 0;
  for (int i = 0; i < 200; ++i) {
    const Program p = gen.Make();
    const int budget = gen.Budget();
    const std::vector<Trace> all = EnumerateTraces(p, s0, budget);
    for (uint64_t seed = 0; seed < 5; ++seed) {
      Rng rng = Rng::ForStream(seed, Stream::kChoice);
      try {
        const Trace t = Execute(p, s0, rng, budget);
        ++executed;
        if (std::find(all.begin(), all.end(), t) == all.end()) {
          o.Fail("program " + ToText(p) + " seed " + std::to_string(seed) +
                 ": executed trace not enumerated");
        }
      } catch (const NoSuccessfulRun &) {
        ++empty;
        if (!all.empty()) o.Fail("program " + ToText(p) + ": execute found no run, enumerate did");
      }
    }
  }
  if (o.passed) {
    o.detail = std::to_string(executed) + " executions enumerated, " + std::to_string(empty) +
               " agreed on no run";
  }
  return o;
}

// --- A4 ---------------------------------------------------------------------

Outcome Discrimination() {
  const Lexicon lex = BuiltinLexicon();
  const std::vector<std::string> verbs = {"roll", "slide", "bounce", "fly", "move"};
  const std::vector<std::string> past = {"rolled", "slid", "bounced", "flew", "moved"};
  // expected[trace][frame]: the checks that must fail, or "" for a pass.
  const std::vector<std::vector<std::string>> expected = {
      {"", "rotation_coupling", "contact_profile", "contact_profile,rotation_coupling", ""},
      {"rotation_coupling", "", "contact_profile", "contact_profile", ""},
      {"contact_profile,rotation_coupling", "contact_profile", "", "contact_profile", ""},
      {"contact_profile,rotation_coupling", "contact_profile", "contact_profile", "", ""},
      {"rotation_coupling", "", "contact_profile", "contact_profile", ""},
  };
  Outcome o;
  int cells = 0;
  for (size_t v = 0; v < verbs.size(); ++v) {
    SceneConfig cfg;
    cfg.seed = 7;
    const testing::Run run = testing::Simulate("the ball " + past[v], cfg);
    for (size_t w = 0; w < verbs.size(); ++w) {
      const EventFrame frame = ParseText("the ball " + past[w], lex);
      const VerificationReport r = VerifyTrace(run.trace, frame, run.scene, lex);
      std::string failed;
      for (const CheckResult &c : r.checks) {
        if (!c.passed) failed += (failed.empty() ? "" : ",") + c.name;
      }
      ++cells;
      if (failed != expected[v][w]) {
        o.Fail(verbs[v] + " trace vs " + verbs[w] + " frame failed {" + failed + "}, expected {" +
               expected[v][w] + "}");
      }
    }
  }
  if (o.passed) o.detail = std::to_string(cells) + " cells match the matrix";
  return o;
}

// --- A5 ---------------------------------------------------------------------

Outcome KinematicIdentities() {
  const Lexicon lex = BuiltinLexicon();
  SceneConfig cfg;
  WorldState w;
  w.physics = Physics::From(cfg);
  Body ball = MakeBody("ball", *lex.FindNoun("ball"));
  ball.position = {0.0, 0.5, 0.0};
  w.bodies.push_back(ball);
  Body floor = MakeBody("floor", *lex.FindNoun("floor"));
  w.bodies.push_back(floor);
  const Vec3 dir{std::cos(0.3), 0.0, std::sin(0.3)};

  Outcome o;
  double worst_roll = 0.0;
  {
    WorldState s = w;
    double total_d = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const WorldState n = Tick(s, Action::kRoll, "ball", dir);
      const Vec3 d = n.Get("ball").position - s.Get("ball").position;
      const double dd = std::hypot(d.x, d.z);
      total_d += dd;
      worst_roll = std::max(worst_roll,
                            std::abs((n.Get("ball").rotation - s.Get("ball").rotation) - dd / 0.5));
      s = n;
    }
    worst_roll = std::max(worst_roll, std::abs(s.Get("ball").rotation - total_d / 0.5));
    if (worst_roll > 1e-6) o.Fail("roll coupling error " + std::to_string(worst_roll));
  }
  double slide_rot = 0.0;
  {
    WorldState s = w;
    for (int i = 0; i < 1000; ++i) s = Tick(s, Action::kSlide, "ball", dir);
    slide_rot = std::abs(s.Get("ball").rotation);
    if (slide_rot > 1e-9) o.Fail("slide rotated by " + std::to_string(slide_rot));
  }
  std::vector<double> apexes = {2.0};
  {
    WorldState s = w;
    s.Mutable("ball").position.y = 2.0 + 0.5;
    double peak = 0.0;
    bool rising = false;
    for (int i = 0; i < 20000 && apexes.size() < 4; ++i) {
      const WorldState n = Tick(s, Action::kBounce, "ball", dir);
      const double vy = n.Get("ball").velocity.y;
      const double h = n.Get("ball").position.y - 0.5;
      if (vy > 0.0) {
        rising = true;
        peak = std::max(peak, h);
      } else if (rising) {
        apexes.push_back(std::max(peak, h));
        rising = false;
        peak = 0.0;
      }
      s = n;
    }
    const double target = cfg.restitution * cfg.restitution;
    if (apexes.size() < 4) o.Fail("fewer than three bounces");
    for (size_t k = 1; k < apexes.size(); ++k) {
      const double ratio = apexes[k] / apexes[k - 1];
      if (std::abs(ratio - target) > 0.05 * target) {
        o.Fail("apex ratio " + std::to_string(k) + " = " + std::to_string(ratio) +
               ", expected " + std::to_string(target));
      }
    }
  }
  if (o.passed) {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "roll error %.1e rad, slide rotation %.1e rad, apex ratios %.4f %.4f %.4f",
                  worst_roll, slide_rot, apexes[1] / apexes[0], apexes[2] / apexes[1],
                  apexes[3] / apexes[2]);
    o.detail = buf;
  }
  return o;
}

// --- A6 ---------------------------------------------------------------------

Outcome Determinism(const std::filesystem::path &dir) {
  Outcome o;
  const std::string a = (dir / "a6_a.jsonl").string();
  const std::string b = (dir / "a6_b.jsonl").string();
  const std::string c = (dir / "a6_c.csv").string();
  for (const std::string &path : {a, b}) {
    if (Cli({"simulate", kExample, "--seed", "42", "--verify", "--out", path}) != 0) {
      o.Fail("simulate failed");
    }
  }
  if (Cli({"simulate", kExample, "--seed", "42", "--format", "csv", "--out", c}) != 0) {
    o.Fail("csv simulate failed");
  }
  if (!o.passed) return o;
  const std::string ja = testing::Slurp(a);
  if (ja != testing::Slurp(b)) o.Fail("repeated runs differ");
  if (ReadTrace(ja) != ReadTrace(testing::Slurp(c))) o.Fail("jsonl and csv values differ");
  if (o.passed) o.detail = "byte-identical reruns (" + std::to_string(ja.size()) + " bytes), csv == jsonl";
  return o;
}

// --- A7 ---------------------------------------------------------------------

Outcome DegenerateGoal(const std::filesystem::path &dir) {
  Outcome o;
  // Ball radius 0.5 plus half the wall depth 0.1: the surfaces touch.
  const std::string cfg = (dir / "a7.json").string();
  testing::Spit(cfg, "{\"ground_distance\": 0.6}");
  const std::string path = (dir / "a7.jsonl").string();
  std::string text;
  const int code =
      Cli({"simulate", kExample, "--config", cfg, "--verify", "--out", path}, &text);
  if (code != 0) {
    o.Fail("exit " + std::to_string(code) + ": " + text);
    return o;
  }
  const TraceFile f = ReadTrace(testing::Slurp(path));
  if (f.records.size() != 1) o.Fail(std::to_string(f.records.size() - 1) + " ticks, expected 0");
  if (o.passed) o.detail = "zero-tick trace verified";
  return o;
}

}  // namespace
}  // namespace mosim

int main(int argc, char **argv) {
  using mosim::Outcome;
  const std::filesystem::path dir = mosim::testing::ScratchDir("acceptance");
  struct Criterion {
    const char *id;
    const char *name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"A1", "running example", [&] { return mosim::RunningExample(dir); }},
      {"A2", "corpus", [&] { return mosim::Corpus(dir); }},
      {"A3", "oracle equivalence", [] { return mosim::OracleEquivalence(); }},
      {"A4", "discrimination matrix", [] { return mosim::Discrimination(); }},
      {"A5", "kinematic identities", [] { return mosim::KinematicIdentities(); }},
      {"A6", "determinism", [&] { return mosim::Determinism(dir); }},
      {"A7", "degenerate goal", [&] { return mosim::DegenerateGoal(dir); }},
  };
  const std::vector<std::string> only(argv + 1, argv + argc);
  int failures = 0;
  for (const Criterion &c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    if (!o.passed) ++failures;
    std::printf("%s %s %s: %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
  }
  std::filesystem::remove_all(dir);
  return failures == 0 ? 0 : 1;
}
