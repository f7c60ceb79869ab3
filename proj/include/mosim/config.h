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

#ifndef MOSIM_CONFIG_H_
#define MOSIM_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace mosim {

// Simulation parameters. Every value that is not fixed by the sentence lives
// here and is recorded in the trace header.
struct SceneConfig {
  double dt = 1.0 / 60.0;         // s
  double speed = 1.0;             // m/s, horizontal
  double ground_distance = 5.0;   // m, theme origin to ground centroid
  double contact_eps = 1e-3;      // m
  double gravity = 9.81;          // m/s^2
  double restitution = 0.8;       // (0, 1]
  double bounce_speed = 1.2;      // m/s, initial upward speed of a bouncing theme
  int min_bare_frames = 30;
  int max_bare_frames = 300;
  int max_frames = 10000;
  uint64_t seed = 0;

  bool operator==(const SceneConfig &) const = default;
};

// Throws ConfigError if an invariant does not hold.
void ValidateConfig(const SceneConfig &cfg);

// Reads a JSON object whose keys are SceneConfig field names, layered over
// `base`. Unknown keys and ill-typed values raise ConfigError.
SceneConfig LoadConfig(std::string_view document, const SceneConfig &base = {});
SceneConfig LoadConfigFile(const std::string &path, const SceneConfig &base = {});

}  // namespace mosim

#endif  // MOSIM_CONFIG_H_
