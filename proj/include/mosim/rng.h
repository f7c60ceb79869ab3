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

#ifndef MOSIM_RNG_H_
#define MOSIM_RNG_H_

#include <cstdint>

namespace mosim {

// Independent consumers of randomness. Each draws from its own stream so
// that, e.g., adding a Choice to a program never perturbs the sampled
// direction or duration.
enum class Stream : uint64_t {
  kUnderspecified = 1,  // bare-verb duration, free motion direction
  kChoice = 2,          // Choice and Star resolution during execution
};

// SplitMix64 generator. The sequence is fully specified here so that other
// implementations can reproduce it:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// A stream is seeded with Mix(seed ^ (stream * 0xD1B54A32D192ED03)).
class Rng {
 public:
  explicit Rng(uint64_t state) : state_(state) {}

  static Rng ForStream(uint64_t seed, Stream stream);

  uint64_t Next();

  // Uniform integer in [lo, hi]: draws r, rejects r < (2^64 mod span),
  // returns lo + r % span with span = hi - lo + 1.
  int64_t UniformInt(int64_t lo, int64_t hi);

  // Uniform double in [0, 1) from the top 53 bits.
  double UniformUnit();

  bool Coin() { return (Next() >> 63) != 0; }

  // One SplitMix64 output step applied to a value (no state).
  static uint64_t Mix(uint64_t z);

 private:
  uint64_t state_;
};

}  // namespace mosim

#endif  // MOSIM_RNG_H_
