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

#ifndef MOSIM_VERIFY_H_
#define MOSIM_VERIFY_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mosim/config.h"
#include "mosim/ditl.h"
#include "mosim/execute.h"
#include "mosim/lexicon.h"
#include "mosim/parser.h"
#include "mosim/scene.h"

namespace mosim {

enum class CheckMode { kInitially, kFinally, kThroughout };

struct TraceCheck {
  bool passed = false;
  std::optional<size_t> offending;  // state index
  std::string detail;
};

// Evaluates a modal-free formula at the first, last or every state. An
// unbound object fails the check with a detail instead of throwing. Throws
// DiamondNotAllowed.
TraceCheck CheckFormulaOnTrace(const Trace &trace, const Formula &f, CheckMode mode);

// Tolerances of the rotation checks, rad.
inline constexpr double kArcLengthTolerance = 1e-4;
inline constexpr double kNoRotationTolerance = 1e-9;

// Every report lists exactly these checks, in this order.
inline constexpr std::array<std::string_view, 6> kCheckNames = {
    "contact_profile", "rotation_coupling", "path_initial",
    "path_final",      "no_overlap",        "uniform_time"};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::optional<size_t> frame;  // first offending state, for frame-indexed checks
  std::string detail;
};

struct TraceMetrics {
  double path_length = 0.0;   // m, horizontal, theme
  double net_rotation = 0.0;  // rad, theme
  int contact_intervals = 0;  // maximal floor-EC runs over post-tick states
};

struct VerificationReport {
  bool overall = false;
  std::vector<CheckResult> checks;
  TraceMetrics metrics;

  const CheckResult &Get(std::string_view name) const;
  std::string ToJson() const;
  std::string ToText() const;
};

TraceMetrics MeasureTrace(const Trace &trace, const Scene &scene);

// Model-checks `trace` against the constraints `frame` places on it: the
// verb's floor-contact and rotation profile over post-tick states, the path
// tests at the ends, and integrity (no overlap, uniform time). Throws
// TraceSceneMismatch if the trace or frame does not fit the scene.
VerificationReport VerifyTrace(const Trace &trace, const EventFrame &frame, const Scene &scene,
                               const Lexicon &lex);

}  // namespace mosim

#endif  // MOSIM_VERIFY_H_
