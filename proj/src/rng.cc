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

#include "mosim/rng.h"

namespace mosim {

uint64_t Rng::Mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng Rng::ForStream(uint64_t seed, Stream stream) {
  return Rng(Mix(seed ^ (static_cast<uint64_t>(stream) * 0xD1B54A32D192ED03ULL)));
}

uint64_t Rng::Next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return Mix(state_);
}

int64_t Rng::UniformInt(int64_t lo, int64_t hi) {
  if (hi <= lo) return lo;
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(Next());  // full 64-bit range
  // Values below 2^64 mod span are rejected so every residue is equally likely.
  const uint64_t threshold = (0 - span) % span;
  uint64_t r;
  do {
    r = Next();
  } while (r < threshold);
  return lo + static_cast<int64_t>(r % span);
}

double Rng::UniformUnit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

}  // namespace mosim
