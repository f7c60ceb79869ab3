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

#include "mosim/trace_io.h"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "mosim/errors.h"

namespace mosim {

namespace {

using Json = nlohmann::json;

std::string Quote(std::string_view s) { return Json(std::string(s)).dump(); }

std::string VecText(const Vec3 &v) {
  return "[" + FormatDouble(v.x) + "," + FormatDouble(v.y) + "," + FormatDouble(v.z) + "]";
}

std::string HeaderJson(const TraceHeader &h) {
  const SceneConfig &c = h.config;
  std::string out = "{\"format\":\"mosim-trace\",\"version\":" + Quote(h.version);
  out += ",\"sentence\":" + Quote(h.sentence);
  out += ",\"seed\":" + std::to_string(h.seed);
  out += ",\"dt\":" + FormatDouble(c.dt);
  out += ",\"config\":{";
  out += "\"dt\":" + FormatDouble(c.dt);
  out += ",\"speed\":" + FormatDouble(c.speed);
  out += ",\"ground_distance\":" + FormatDouble(c.ground_distance);
  out += ",\"contact_eps\":" + FormatDouble(c.contact_eps);
  out += ",\"gravity\":" + FormatDouble(c.gravity);
  out += ",\"restitution\":" + FormatDouble(c.restitution);
  out += ",\"bounce_speed\":" + FormatDouble(c.bounce_speed);
  out += ",\"min_bare_frames\":" + std::to_string(c.min_bare_frames);
  out += ",\"max_bare_frames\":" + std::to_string(c.max_bare_frames);
  out += ",\"max_frames\":" + std::to_string(c.max_frames);
  out += ",\"seed\":" + std::to_string(c.seed);
  out += "}";
  out += ",\"bindings\":{\"theme\":" + Quote(h.theme) + ",\"ground\":" +
         (h.ground ? Quote(*h.ground) : "null") + ",\"floor\":" + Quote(h.floor) + "}";
  out += ",\"direction\":" + VecText(h.direction);
  out += ",\"coordinates\":" + Quote(h.coordinates);
  out += ",\"frames\":" + std::to_string(h.frames);
  out += ",\"bodies\":[";
  for (size_t i = 0; i < h.bodies.size(); ++i) out += (i ? "," : "") + Quote(h.bodies[i]);
  out += "]}";
  return out;
}

[[noreturn]] void Bad(const std::string &detail) { throw TraceFormatError(detail); }

const Json &Field(const Json &obj, const char *name) {
  if (!obj.is_object()) Bad("expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) Bad(std::string("missing field '") + name + "'");
  return *it;
}

double Number(const Json &obj, const char *name) {
  const Json &v = Field(obj, name);
  if (!v.is_number()) Bad(std::string("field '") + name + "' is not a number");
  return v.get<double>();
}

int64_t Integer(const Json &obj, const char *name) {
  const Json &v = Field(obj, name);
  if (!v.is_number_integer()) Bad(std::string("field '") + name + "' is not an integer");
  return v.get<int64_t>();
}

std::string String(const Json &obj, const char *name) {
  const Json &v = Field(obj, name);
  if (!v.is_string()) Bad(std::string("field '") + name + "' is not a string");
  return v.get<std::string>();
}

Vec3 ReadVec(const Json &v) {
  if (!v.is_array() || v.size() != 3) Bad("expected a 3-vector");
  for (const Json &c : v) {
    if (!c.is_number()) Bad("vector component is not a number");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

Relation ReadRelation(const std::string &s) {
  if (s == "EC") return Relation::kEC;
  if (s == "DC") return Relation::kDC;
  if (s == "PO") return Relation::kPO;
  Bad("unknown relation '" + s + "'");
}

Action ReadAction(const std::string &s) {
  auto a = ParseAction(s);
  if (!a) Bad("unknown action label '" + s + "'");
  return *a;
}

TraceHeader ParseHeader(const std::string &line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error &) {
    Bad("malformed header record");
  }
  if (String(j, "format") != "mosim-trace") Bad("not a mosim trace");
  TraceHeader h;
  h.version = String(j, "version");
  if (h.version != kTraceFormatVersion) {
    Bad("unsupported trace version '" + h.version + "', reader supports '" +
        kTraceFormatVersion + "'");
  }
  h.sentence = String(j, "sentence");
  const Json &seed = Field(j, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) Bad("seed is not an integer");
  h.seed = seed.get<uint64_t>();
  const Json &c = Field(j, "config");
  h.config.dt = Number(c, "dt");
  h.config.speed = Number(c, "speed");
  h.config.ground_distance = Number(c, "ground_distance");
  h.config.contact_eps = Number(c, "contact_eps");
  h.config.gravity = Number(c, "gravity");
  h.config.restitution = Number(c, "restitution");
  h.config.bounce_speed = Number(c, "bounce_speed");
  h.config.min_bare_frames = static_cast<int>(Integer(c, "min_bare_frames"));
  h.config.max_bare_frames = static_cast<int>(Integer(c, "max_bare_frames"));
  h.config.max_frames = static_cast<int>(Integer(c, "max_frames"));
  h.config.seed = Field(c, "seed").get<uint64_t>();
  const Json &b = Field(j, "bindings");
  h.theme = String(b, "theme");
  if (!Field(b, "ground").is_null()) h.ground = String(b, "ground");
  h.floor = String(b, "floor");
  h.direction = ReadVec(Field(j, "direction"));
  h.coordinates = String(j, "coordinates");
  const int64_t frames = Integer(j, "frames");
  if (frames < 1) Bad("frame count must be positive");
  h.frames = static_cast<size_t>(frames);
  const Json &bodies = Field(j, "bodies");
  if (!bodies.is_array()) Bad("bodies is not an array");
  for (const Json &id : bodies) {
    if (!id.is_string()) Bad("body id is not a string");
    h.bodies.push_back(id.get<std::string>());
  }
  return h;
}

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

TraceFile ReadJsonl(const std::vector<std::string> &lines) {
  TraceFile file;
  file.header = ParseHeader(lines[0]);
  for (size_t i = 1; i < lines.size(); ++i) {
    Json j;
    try {
      j = Json::parse(lines[i]);
    } catch (const Json::parse_error &) {
      Bad("malformed record on line " + std::to_string(i + 1));
    }
    TraceRecord r;
    r.index = static_cast<size_t>(Integer(j, "index"));
    r.time = Number(j, "time");
    const Json &label = Field(j, "label");
    if (!label.is_null()) r.label = ReadAction(String(j, "label"));
    const Json &bodies = Field(j, "bodies");
    for (const std::string &id : file.header.bodies) {
      const Json &pose = Field(bodies, id.c_str());
      r.bodies.push_back({id, ReadVec(Field(pose, "pos")), Number(pose, "rot")});
    }
    if (bodies.size() != file.header.bodies.size()) Bad("record lists undeclared bodies");
    r.floor = ReadRelation(String(j, "floor"));
    if (!Field(j, "goal").is_null()) r.goal = ReadRelation(String(j, "goal"));
    file.records.push_back(std::move(r));
  }
  return file;
}

std::vector<std::string> SplitCsv(const std::string &line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell.push_back(c);
    }
  }
  cells.push_back(std::move(cell));
  return cells;
}

double CsvNumber(const std::string &cell) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    Bad("malformed number '" + cell + "'");
  }
  return v;
}

std::vector<std::string> CsvColumns(const TraceHeader &h) {
  std::vector<std::string> cols = {"index", "time", "label", "floor", "goal"};
  for (const std::string &id : h.bodies) {
    for (const char *suffix : {".x", ".y", ".z", ".rot"}) cols.push_back(id + suffix);
  }
  return cols;
}

TraceFile ReadCsv(const std::vector<std::string> &lines) {
  TraceFile file;
  file.header = ParseHeader(lines[0].substr(2));
  if (lines.size() < 2) Bad("missing column header");
  const std::vector<std::string> cols = CsvColumns(file.header);
  if (SplitCsv(lines[1]) != cols) Bad("column header does not match the declared bodies");
  for (size_t i = 2; i < lines.size(); ++i) {
    const std::vector<std::string> cells = SplitCsv(lines[i]);
    if (cells.size() != cols.size()) Bad("row " + std::to_string(i + 1) + " has the wrong width");
    TraceRecord r;
    const double index = CsvNumber(cells[0]);
    if (index < 0 || index != static_cast<double>(static_cast<size_t>(index))) {
      Bad("bad index '" + cells[0] + "'");
    }
    r.index = static_cast<size_t>(index);
    r.time = CsvNumber(cells[1]);
    if (!cells[2].empty()) r.label = ReadAction(cells[2]);
    r.floor = ReadRelation(cells[3]);
    if (!cells[4].empty()) r.goal = ReadRelation(cells[4]);
    size_t c = 5;
    for (const std::string &id : file.header.bodies) {
      BodyPose pose;
      pose.id = id;
      pose.position = {CsvNumber(cells[c]), CsvNumber(cells[c + 1]), CsvNumber(cells[c + 2])};
      pose.rotation = CsvNumber(cells[c + 3]);
      c += 4;
      r.bodies.push_back(std::move(pose));
    }
    file.records.push_back(std::move(r));
  }
  return file;
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

TraceFile MakeTraceFile(const Trace &trace, const Scene &scene, std::string_view sentence,
                        const SceneConfig &cfg) {
  TraceFile file;
  TraceHeader &h = file.header;
  h.sentence = std::string(sentence);
  h.seed = cfg.seed;
  h.config = cfg;
  h.theme = scene.theme;
  h.ground = scene.ground;
  if (const Body *floor = scene.initial.Floor()) h.floor = floor->id;
  h.direction = scene.direction;
  h.frames = trace.states.size();
  for (const Body &b : scene.initial.bodies) h.bodies.push_back(b.id);

  for (size_t i = 0; i < trace.states.size(); ++i) {
    const WorldState &s = trace.states[i];
    TraceRecord r;
    r.index = i;
    r.time = s.time;
    if (i > 0) r.label = trace.labels[i - 1];
    for (const std::string &id : h.bodies) {
      const Body &b = s.Get(id);
      r.bodies.push_back({id, b.position, b.rotation});
    }
    const Body &theme = s.Get(scene.theme);
    r.floor = ContactRelation(theme, s.Get(h.floor), s.physics.contact_eps);
    if (scene.ground) r.goal = ContactRelation(theme, s.Get(*scene.ground), s.physics.contact_eps);
    file.records.push_back(std::move(r));
  }
  return file;
}

std::string WriteTrace(const TraceFile &file, TraceFormat format) {
  std::string out;
  if (format == TraceFormat::kJsonl) {
    out += HeaderJson(file.header) + "\n";
    for (const TraceRecord &r : file.records) {
      out += "{\"index\":" + std::to_string(r.index);
      out += ",\"time\":" + FormatDouble(r.time);
      out += ",\"label\":" + (r.label ? Quote(ActionName(*r.label)) : std::string("null"));
      out += ",\"bodies\":{";
      for (size_t i = 0; i < r.bodies.size(); ++i) {
        const BodyPose &p = r.bodies[i];
        out += (i ? "," : "") + Quote(p.id) + ":{\"pos\":" + VecText(p.position) +
               ",\"rot\":" + FormatDouble(p.rotation) + "}";
      }
      out += "},\"floor\":" + Quote(RelationName(r.floor));
      out += ",\"goal\":" + (r.goal ? Quote(RelationName(*r.goal)) : std::string("null"));
      out += "}\n";
    }
    return out;
  }

  out += "# " + HeaderJson(file.header) + "\n";
  const std::vector<std::string> cols = CsvColumns(file.header);
  for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += "\n";
  for (const TraceRecord &r : file.records) {
    out += std::to_string(r.index) + "," + FormatDouble(r.time) + ",";
    if (r.label) out += ActionName(*r.label);
    out += "," + std::string(RelationName(r.floor)) + ",";
    if (r.goal) out += RelationName(*r.goal);
    for (const BodyPose &p : r.bodies) {
      out += "," + FormatDouble(p.position.x) + "," + FormatDouble(p.position.y) + "," +
             FormatDouble(p.position.z) + "," + FormatDouble(p.rotation);
    }
    out += "\n";
  }
  return out;
}

TraceFile ReadTrace(std::string_view text) {
  const std::vector<std::string> lines = SplitLines(text);
  if (lines.empty()) Bad("empty trace file");
  TraceFile file = lines[0].rfind("# ", 0) == 0 ? ReadCsv(lines) : ReadJsonl(lines);
  if (file.records.size() != file.header.frames) {
    Bad("header declares " + std::to_string(file.header.frames) + " records, found " +
        std::to_string(file.records.size()));
  }
  for (size_t i = 0; i < file.records.size(); ++i) {
    const TraceRecord &r = file.records[i];
    if (r.index != i) Bad("record " + std::to_string(i) + " carries index " + std::to_string(r.index));
    if ((i == 0) != !r.label.has_value()) {
      Bad(i == 0 ? "initial record carries an action label"
                 : "record " + std::to_string(i) + " lacks an action label");
    }
  }
  return file;
}

Trace RebuildTrace(const TraceFile &file, const Scene &scene) {
  for (const std::string &id : file.header.bodies) {
    if (scene.initial.Find(id) == nullptr) {
      throw TraceSceneMismatch("trace body '" + id + "' is not in the scene");
    }
  }
  for (const Body &b : scene.initial.bodies) {
    if (std::find(file.header.bodies.begin(), file.header.bodies.end(), b.id) ==
        file.header.bodies.end()) {
      throw TraceSceneMismatch("scene body '" + b.id + "' is not in the trace");
    }
  }
  Trace trace;
  trace.t0 = file.records.empty() ? 0.0 : file.records.front().time;
  trace.dt = file.header.config.dt;
  for (const TraceRecord &r : file.records) {
    WorldState s = scene.initial;
    s.time = r.time;
    for (const BodyPose &p : r.bodies) {
      Body &b = s.Mutable(p.id);
      b.position = p.position;
      b.rotation = p.rotation;
    }
    if (const Body *floor = s.Floor()) {
      Body &theme = s.Mutable(scene.theme);
      theme.floor_contact =
          ContactRelation(theme, *floor, s.physics.contact_eps) == Relation::kEC;
    }
    trace.states.push_back(std::move(s));
    if (r.label) trace.labels.push_back(*r.label);
  }
  return trace;
}

}  // namespace mosim
