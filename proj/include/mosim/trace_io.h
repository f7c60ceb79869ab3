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

#ifndef MOSIM_TRACE_IO_H_
#define MOSIM_TRACE_IO_H_

// Trace files: one header record followed by one record per state, as JSON
// lines or as CSV with the header in a leading comment. Every float is
// written with 17 significant digits so that reading it back yields the
// same double. See docs/trace_format.md.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mosim/config.h"
#include "mosim/execute.h"
#include "mosim/kinematics.h"
#include "mosim/scene.h"
#include "mosim/vec3.h"

namespace mosim {

inline constexpr char kTraceFormatVersion[] = "1";
inline constexpr char kCoordinateConvention[] = "y-up right-handed, goal along +x";

enum class TraceFormat { kJsonl, kCsv };

struct TraceHeader {
  std::string version = kTraceFormatVersion;
  std::string sentence;
  uint64_t seed = 0;
  SceneConfig config;
  std::string theme;
  std::optional<std::string> ground;
  std::string floor = "floor";
  Vec3 direction;
  std::string coordinates = kCoordinateConvention;
  size_t frames = 0;
  std::vector<std::string> bodies;

  bool operator==(const TraceHeader &) const = default;
};

struct BodyPose {
  std::string id;
  Vec3 position;
  double rotation = 0.0;

  bool operator==(const BodyPose &) const = default;
};

struct TraceRecord {
  size_t index = 0;
  double time = 0.0;
  std::optional<Action> label;  // absent for the initial state
  std::vector<BodyPose> bodies;
  Relation floor = Relation::kDC;     // theme vs floor
  std::optional<Relation> goal;       // theme vs ground

  bool operator==(const TraceRecord &) const = default;
};

struct TraceFile {
  TraceHeader header;
  std::vector<TraceRecord> records;

  bool operator==(const TraceFile &) const = default;
};

TraceFile MakeTraceFile(const Trace &trace, const Scene &scene, std::string_view sentence,
                        const SceneConfig &cfg);

std::string WriteTrace(const TraceFile &file, TraceFormat format);

// Detects the format from the first byte. Throws TraceFormatError on any
// version, field or record-count mismatch.
TraceFile ReadTrace(std::string_view text);

// Rebuilds the in-memory trace by applying the recorded poses to the
// scene's bodies. Throws TraceSceneMismatch.
Trace RebuildTrace(const TraceFile &file, const Scene &scene);

// "%.17g".
std::string FormatDouble(double v);

}  // namespace mosim

#endif  // MOSIM_TRACE_IO_H_
