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

#include "mosim/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mosim/compile.h"
#include "mosim/config.h"
#include "mosim/errors.h"
#include "mosim/execute.h"
#include "mosim/lexicon.h"
#include "mosim/parser.h"
#include "mosim/scene.h"
#include "mosim/trace_io.h"
#include "mosim/verify.h"

namespace mosim {

namespace {

constexpr char kDefaultEnumerateSentence[] = "the ball rolled to the wall";

std::optional<std::string> Env(const char *name) {
  const char *v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Options shared by the subcommands that build a scene.
struct CommonOptions {
  std::string lexicon_path;
  std::string config_path;

  Lexicon LoadLexiconOrBuiltin() const {
    std::optional<std::string> path =
        lexicon_path.empty() ? Env("MOSIM_LEXICON") : std::optional(lexicon_path);
    return path ? LoadLexiconFile(*path) : BuiltinLexicon();
  }

  SceneConfig LoadBaseConfig() const {
    std::optional<std::string> path =
        config_path.empty() ? Env("MOSIM_CONFIG") : std::optional(config_path);
    return path ? LoadConfigFile(*path) : SceneConfig{};
  }
};

struct SimulateOptions {
  CommonOptions common;
  std::string sentence;
  std::optional<uint64_t> seed;
  std::optional<double> dt;
  std::optional<double> speed;
  std::optional<int> max_frames;
  std::string out_path;
  std::string format = "jsonl";
  bool verify = false;
};

int Simulate(const SimulateOptions &opt, std::ostream &out, std::ostream &err) {
  const Lexicon lex = opt.common.LoadLexiconOrBuiltin();
  SceneConfig cfg = opt.common.LoadBaseConfig();
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.dt) cfg.dt = *opt.dt;
  if (opt.speed) cfg.speed = *opt.speed;
  if (opt.max_frames) cfg.max_frames = *opt.max_frames;
  ValidateConfig(cfg);

  const EventFrame frame = ParseText(opt.sentence, lex);
  const Program program = CompileEvent(frame, lex, CompileConfig::From(cfg));
  const Scene scene = BuildScene(frame, lex, cfg);
  Rng rng = Rng::ForStream(cfg.seed, Stream::kChoice);
  const Trace trace = Execute(program, scene.initial, rng, cfg.max_frames);

  const TraceFormat format = opt.format == "csv" ? TraceFormat::kCsv : TraceFormat::kJsonl;
  const std::string path =
      opt.out_path.empty() ? (format == TraceFormat::kCsv ? "trace.csv" : "trace.jsonl")
                           : opt.out_path;
  const TraceFile file = MakeTraceFile(trace, scene, opt.sentence, cfg);
  std::ofstream f(path, std::ios::binary);
  f << WriteTrace(file, format);
  f.close();
  if (!f) {
    err << "error: cannot write '" << path << "'\n";
    return kExitInputError;
  }

  const TraceMetrics m = MeasureTrace(trace, scene);
  const TraceRecord &last = file.records.back();
  out << "frames: " << trace.states.size() << " (" << trace.TickCount() << " ticks)\n";
  out << "path_length: " << FormatDouble(m.path_length) << " m\n";
  out << "net_rotation: " << FormatDouble(m.net_rotation) << " rad\n";
  out << "final floor relation: " << RelationName(last.floor) << "\n";
  if (last.goal) out << "final goal relation: " << RelationName(*last.goal) << "\n";
  out << "trace: " << path << "\n";

  if (!opt.verify) return kExitOk;
  const VerificationReport report = VerifyTrace(trace, frame, scene, lex);
  out << report.ToText();
  return report.overall ? kExitOk : kExitCheckFailed;
}

int Parse(const CommonOptions &common, const std::string &sentence, std::ostream &out) {
  const Lexicon lex = common.LoadLexiconOrBuiltin();
  out << FrameToJson(ParseText(sentence, lex)) << "\n";
  return kExitOk;
}

int Check(const CommonOptions &common, const std::string &trace_path, const std::string &sentence,
          bool json, std::ostream &out) {
  const Lexicon lex = common.LoadLexiconOrBuiltin();
  const TraceFile file = ReadTrace(ReadFile(trace_path));
  const EventFrame frame = ParseText(sentence, lex);
  const Scene scene = BuildScene(frame, lex, file.header.config);
  if (scene.theme != file.header.theme || scene.ground != file.header.ground) {
    throw TraceSceneMismatch("sentence binds theme '" + scene.theme + "' but the trace binds '" +
                             file.header.theme + "'");
  }
  const Trace trace = RebuildTrace(file, scene);
  const VerificationReport report = VerifyTrace(trace, frame, scene, lex);
  out << (json ? report.ToJson() + "\n" : report.ToText());
  return report.overall ? kExitOk : kExitCheckFailed;
}

std::string Labels(const Trace &t) {
  std::string s;
  for (size_t i = 0; i < t.labels.size(); ++i) {
    s += (i ? " " : "") + std::string(ActionName(t.labels[i]));
  }
  return s;
}

int Enumerate(const CommonOptions &common, const std::string &program_path,
              const std::string &sentence, int bound, size_t cap, std::ostream &out) {
  const Lexicon lex = common.LoadLexiconOrBuiltin();
  const SceneConfig cfg = common.LoadBaseConfig();
  const Scene scene = BuildScene(ParseText(sentence, lex), lex, cfg);
  const Program program = ParseProgram(ReadFile(program_path), scene.theme);
  const std::vector<Trace> traces = EnumerateTraces(program, scene.initial, bound, cap);
  for (size_t i = 0; i < traces.size(); ++i) {
    out << "trace " << i << ": ticks=" << traces[i].TickCount() << " [" << Labels(traces[i])
        << "]\n";
  }
  out << "total: " << traces.size() << " traces\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Simulates and verifies motion sentences.", "mosim"};
  app.require_subcommand(1);

  CommonOptions common;
  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--lexicon", common.lexicon_path, "Lexicon JSON (or $MOSIM_LEXICON)");
    sub->add_option("--config", common.config_path, "Scene config JSON (or $MOSIM_CONFIG)");
  };

  SimulateOptions sim;
  CLI::App *simulate = app.add_subcommand("simulate", "Simulate a sentence and write its trace");
  add_common(simulate);
  simulate->add_option("sentence", sim.sentence, "Sentence")->required();
  simulate->add_option("--seed", sim.seed, "Seed for underspecified parameters");
  simulate->add_option("--dt", sim.dt, "Tick length in seconds");
  simulate->add_option("--speed", sim.speed, "Horizontal speed in m/s");
  simulate->add_option("--max-frames", sim.max_frames, "Tick budget");
  simulate->add_option("--out", sim.out_path, "Trace output path");
  simulate->add_option("--format", sim.format, "Trace format")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  simulate->add_flag("--verify", sim.verify, "Verify the trace against the sentence");

  std::string parse_sentence;
  CLI::App *parse = app.add_subcommand("parse", "Print the event frame of a sentence");
  add_common(parse);
  parse->add_option("sentence", parse_sentence, "Sentence")->required();

  std::string check_trace;
  std::string check_sentence;
  bool check_json = false;
  CLI::App *check = app.add_subcommand("check", "Verify a trace file against a sentence");
  add_common(check);
  check->add_option("--trace", check_trace, "Trace file (jsonl or csv)")->required();
  check->add_option("--sentence", check_sentence, "Sentence")->required();
  check->add_flag("--json", check_json, "Print the report as JSON");

  std::string enum_program;
  std::string enum_sentence = kDefaultEnumerateSentence;
  int enum_bound = 20;
  size_t enum_cap = kDefaultNodeCap;
  CLI::App *enumerate = app.add_subcommand("enumerate", "List all successful runs of a program");
  add_common(enumerate);
  enumerate->add_option("--program", enum_program, "Program text file")->required();
  enumerate->add_option("--bound", enum_bound, "Tick budget")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--sentence", enum_sentence, "Sentence that sets up the scene");
  enumerate->add_option("--cap", enum_cap, "Search node cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*simulate) {
      sim.common = common;
      return Simulate(sim, out, err);
    }
    if (*parse) return Parse(common, parse_sentence, out);
    if (*check) return Check(common, check_trace, check_sentence, check_json, out);
    return Enumerate(common, enum_program, enum_sentence, enum_bound, enum_cap, out);
  } catch (const NoSuccessfulRun &e) {
    err << "error: " << e.what() << "\n";
    return kExitNoRun;
  } catch (const ExplosionGuard &e) {
    err << "error: " << e.what() << "\n";
    return kExitNoRun;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace mosim
