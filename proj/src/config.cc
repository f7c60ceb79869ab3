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

#include "mosim/config.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mosim/errors.h"

namespace mosim {

void ValidateConfig(const SceneConfig &cfg) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(cfg.dt)) throw ConfigError("dt must be > 0");
  if (!positive(cfg.speed)) throw ConfigError("speed must be > 0");
  if (!positive(cfg.contact_eps)) throw ConfigError("contact_eps must be > 0");
  if (!std::isfinite(cfg.ground_distance)) throw ConfigError("ground_distance must be finite");
  if (!std::isfinite(cfg.gravity) || cfg.gravity < 0.0) throw ConfigError("gravity must be >= 0");
  if (!(cfg.restitution > 0.0 && cfg.restitution <= 1.0)) {
    throw ConfigError("restitution must lie in (0, 1]");
  }
  if (!std::isfinite(cfg.bounce_speed) || cfg.bounce_speed < 0.0) {
    throw ConfigError("bounce_speed must be >= 0");
  }
  if (cfg.min_bare_frames < 0) throw ConfigError("min_bare_frames must be >= 0");
  if (cfg.min_bare_frames > cfg.max_bare_frames) {
    throw ConfigError("min_bare_frames must not exceed max_bare_frames");
  }
  if (cfg.max_frames < 1) throw ConfigError("max_frames must be >= 1");
}

SceneConfig LoadConfig(std::string_view document, const SceneConfig &base) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error &e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("expected a JSON object");

  SceneConfig cfg = base;
  for (const auto &[key, value] : root.items()) {
    auto number = [&]() {
      if (!value.is_number()) throw ConfigError("'" + key + "' must be a number");
      return value.get<double>();
    };
    auto integer = [&]() {
      if (!value.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
      return value.get<int64_t>();
    };
    if (key == "dt") {
      cfg.dt = number();
    } else if (key == "speed") {
      cfg.speed = number();
    } else if (key == "ground_distance") {
      cfg.ground_distance = number();
    } else if (key == "contact_eps") {
      cfg.contact_eps = number();
    } else if (key == "gravity") {
      cfg.gravity = number();
    } else if (key == "restitution") {
      cfg.restitution = number();
    } else if (key == "bounce_speed") {
      cfg.bounce_speed = number();
    } else if (key == "min_bare_frames") {
      cfg.min_bare_frames = static_cast<int>(integer());
    } else if (key == "max_bare_frames") {
      cfg.max_bare_frames = static_cast<int>(integer());
    } else if (key == "max_frames") {
      cfg.max_frames = static_cast<int>(integer());
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer()) {
        throw ConfigError("'seed' must be an integer");
      }
      cfg.seed = value.get<uint64_t>();
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  ValidateConfig(cfg);
  return cfg;
}

SceneConfig LoadConfigFile(const std::string &path, const SceneConfig &base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadConfig(buffer.str(), base);
}

}  // namespace mosim
