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

#ifndef MOSIM_EXECUTE_H_
#define MOSIM_EXECUTE_H_

#include <vector>

#include "mosim/ditl.h"
#include "mosim/kinematics.h"
#include "mosim/rng.h"

namespace mosim {

// A temporally traced run: states s0..sn joined by action labels a1..an.
// State i sits at instant t0 + i*dt; transition i occupies [t(i-1), t(i)).
struct Trace {
  std::vector<WorldState> states;
  std::vector<Action> labels;
  double t0 = 0.0;
  double dt = 0.0;

  double InstantOf(size_t state_index) const { return t0 + static_cast<double>(state_index) * dt; }
  size_t TickCount() const { return labels.size(); }
  const WorldState &initial() const { return states.front(); }
  const WorldState &final() const { return states.back(); }

  bool operator==(const Trace &) const = default;
};

// Runs `program` from `s0` and returns the first fully successful run.
// Choice branches and Star continuation are ordered by coin flips from
// `rng`; failed runs backtrack through the remaining alternatives. Tests and
// assignments take no time; each Tick advances one step. Runs needing more
// than `budget` ticks fail. Throws NoSuccessfulRun (naming the deepest
// failing test), UnboundObjectError, ExplosionGuard.
Trace Execute(const Program &program, const WorldState &s0, Rng &rng, int budget,
              size_t node_cap = kDefaultNodeCap);

// Every successful run within `budget` ticks, duplicates removed, ordered by
// tick count and then left-biased (Choice left first, Star stop first).
// Throws ExplosionGuard once more than `node_cap` search nodes are visited.
std::vector<Trace> EnumerateTraces(const Program &program, const WorldState &s0, int budget,
                                   size_t node_cap = kDefaultNodeCap);

// Whether some run of `program` from `state` within `budget` ticks ends in a
// state satisfying `goal`. Used for modal formulas.
FormulaValue DiamondHolds(const ProgramNode &program, const FormulaNode &goal,
                          const WorldState &state, int budget, size_t node_cap);

}  // namespace mosim

#endif  // MOSIM_EXECUTE_H_
