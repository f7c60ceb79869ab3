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

#include "mosim/execute.h"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "mosim/errors.h"

namespace mosim {

namespace {

// Persistent trace prefix. Alternatives left on the search stack share
// everything up to their branch point.
struct TraceLink {
  mutable std::shared_ptr<const TraceLink> parent;
  WorldState state;
  std::optional<Action> label;  // incoming transition
  int ticks = 0;

  TraceLink(std::shared_ptr<const TraceLink> parent, WorldState state,
            std::optional<Action> label, int ticks)
      : parent(std::move(parent)), state(std::move(state)), label(label), ticks(ticks) {}

  // Unlinks long uniquely-owned chains iteratively.
  ~TraceLink() {
    std::shared_ptr<const TraceLink> p = std::move(parent);
    while (p && p.use_count() == 1) {
      std::shared_ptr<const TraceLink> next = std::move(p->parent);
      p = std::move(next);
    }
  }
};
using LinkPtr = std::shared_ptr<const TraceLink>;

// Persistent continuation: what remains to run, innermost first. For Star
// frames `remaining` counts the iterations still allowed (-1: not started).
struct ContLink {
  std::shared_ptr<const ContLink> next;
  const ProgramNode *node;
  int remaining;
};
using ContPtr = std::shared_ptr<const ContLink>;

ContPtr Push(ContPtr next, const ProgramNode *node, int remaining = -1) {
  return std::make_shared<const ContLink>(ContLink{std::move(next), node, remaining});
}

struct Branch {
  ContPtr cont;
  LinkPtr trace;
};

Trace Materialize(const LinkPtr &last, double t0, double dt) {
  std::vector<const TraceLink *> chain;
  for (const TraceLink *l = last.get(); l != nullptr; l = l->parent.get()) chain.push_back(l);
  std::reverse(chain.begin(), chain.end());
  Trace trace;
  trace.t0 = t0;
  trace.dt = dt;
  trace.states.reserve(chain.size());
  for (const TraceLink *l : chain) {
    trace.states.push_back(l->state);
    if (l->label) trace.labels.push_back(*l->label);
  }
  return trace;
}

// Depth-first search over the runs of a program with explicit backtracking.
// Choice and Star decisions are ordered left/stop first, or by coin flips
// when an Rng is supplied.
class Search {
 public:
  Search(const WorldState &s0, int budget, size_t node_cap, Rng *rng)
      : s0_(s0), budget_(budget), node_cap_(node_cap), rng_(rng) {}

  // Calls `on_success` for each successful run in search order until it
  // returns false.
  template <typename OnSuccess>
  void Run(const ProgramNode &root, OnSuccess on_success) {
    std::vector<Branch> pending;
    pending.push_back({Push(nullptr, &root),
                       std::make_shared<const TraceLink>(nullptr, s0_, std::nullopt, 0)});
    while (!pending.empty()) {
      Branch b = std::move(pending.back());
      pending.pop_back();
      if (RunBranch(b, pending)) {
        if (!on_success(b.trace)) return;
      }
    }
  }

  // Counts `n` units of work against the node cap.
  void Charge(size_t n) {
    visited_ += n;
    if (visited_ > node_cap_) throw ExplosionGuard(node_cap_);
  }

  bool budget_hit() const { return budget_hit_; }
  bool undetermined() const { return undetermined_; }

  std::string FailureSummary() const {
    if (!deepest_) return "program has no runs";
    return "deepest failure after " + std::to_string(deepest_->first) +
           " ticks: " + deepest_->second;
  }

 private:
  void NoteFailure(int ticks, std::string what) {
    if (!deepest_ || ticks > deepest_->first) deepest_.emplace(ticks, std::move(what));
  }

  bool Prefer(bool default_first) { return rng_ != nullptr ? rng_->Coin() : default_first; }

  // Runs one branch deterministically until it succeeds (true), fails
  // (false) or forks; forks push the deferred alternative onto `pending`.
  bool RunBranch(Branch &b, std::vector<Branch> &pending) {
    for (;;) {
      if (++visited_ > node_cap_) throw ExplosionGuard(node_cap_);
      if (!b.cont) return true;
      const ProgramNode &node = *b.cont->node;
      const int remaining = b.cont->remaining;
      ContPtr rest = b.cont->next;
      const WorldState &state = b.trace->state;
      const int ticks = b.trace->ticks;

      switch (node.kind) {
        case Program::Kind::kTest: {
          const FormulaValue v = EvalFormula(*node.formula, state, budget_ - ticks, node_cap_);
          if (v.undetermined) undetermined_ = true;
          if (!v.value) {
            NoteFailure(ticks, "test " + ToText(*node.formula) + " failed");
            return false;
          }
          b.cont = std::move(rest);
          break;
        }
        case Program::Kind::kAssign:
        case Program::Kind::kDirectedAssign: {
          const Value value = EvalTerm(*node.term, state);
          const Value old = EvalTerm(Term::Of(node.attr), state);
          if (value.index() != old.index()) {
            throw DimensionError("assignment to " + std::string(AttrNameText(node.attr.name)) +
                                 " of a value of the wrong dimension");
          }
          if (node.kind == Program::Kind::kDirectedAssign &&
              ValuesEqual(value, old, kAssignTolerance)) {
            NoteFailure(ticks, "directed assignment " + ToText(node) + " left the value unchanged");
            return false;
          }
          WorldState next = state;
          Body &body = next.Mutable(node.attr.object);
          switch (node.attr.name) {
            case AttrName::kLoc:
              body.position = std::get<Vec3>(value);
              break;
            case AttrName::kRot:
              body.rotation = std::get<double>(value);
              break;
            case AttrName::kVel:
              body.velocity = std::get<Vec3>(value);
              break;
          }
          // Zero-duration change: rewrite the current state in place.
          b.trace = std::make_shared<const TraceLink>(b.trace->parent, std::move(next),
                                                      b.trace->label, ticks);
          b.cont = std::move(rest);
          break;
        }
        case Program::Kind::kTick: {
          if (ticks >= budget_) {
            budget_hit_ = true;
            NoteFailure(ticks, "tick budget of " + std::to_string(budget_) + " exhausted");
            return false;
          }
          const Body &theme = state.Get(node.object);
          WorldState next = Tick(state, node.action, node.object, theme.heading);
          b.trace = std::make_shared<const TraceLink>(b.trace, std::move(next), node.action,
                                                      ticks + 1);
          b.cont = std::move(rest);
          break;
        }
        case Program::Kind::kSeq:
          b.cont = Push(Push(std::move(rest), node.second.get()), node.first.get());
          break;
        case Program::Kind::kChoice: {
          ContPtr left = Push(rest, node.first.get());
          ContPtr right = Push(std::move(rest), node.second.get());
          const bool left_first = Prefer(true);
          pending.push_back({left_first ? right : left, b.trace});
          b.cont = left_first ? std::move(left) : std::move(right);
          break;
        }
        case Program::Kind::kStar: {
          const int left = remaining < 0 ? node.bound : remaining;
          if (left == 0) {
            b.cont = std::move(rest);
            break;
          }
          ContPtr again = Push(Push(rest, &node, left - 1), node.first.get());
          const bool stop_first = Prefer(true);
          pending.push_back({stop_first ? again : rest, b.trace});
          b.cont = stop_first ? std::move(rest) : std::move(again);
          break;
        }
      }
    }
  }

  const WorldState &s0_;
  const int budget_;
  const size_t node_cap_;
  Rng *rng_;
  size_t visited_ = 0;
  bool budget_hit_ = false;
  bool undetermined_ = false;
  std::optional<std::pair<int, std::string>> deepest_;
};

}  // namespace

Trace Execute(const Program &program, const WorldState &s0, Rng &rng, int budget,
              size_t node_cap) {
  Search search(s0, budget, node_cap, &rng);
  LinkPtr found;
  search.Run(program.node(), [&](const LinkPtr &link) {
    found = link;
    return false;
  });
  if (!found) throw NoSuccessfulRun(search.FailureSummary());
  return Materialize(found, s0.time, s0.physics.dt);
}

std::vector<Trace> EnumerateTraces(const Program &program, const WorldState &s0, int budget,
                                   size_t node_cap) {
  Search search(s0, budget, node_cap, nullptr);
  std::vector<Trace> traces;
  // Runs with different labels differ; full comparison only within a bucket.
  std::unordered_map<std::string, std::vector<size_t>> by_labels;
  search.Run(program.node(), [&](const LinkPtr &link) {
    Trace t = Materialize(link, s0.time, s0.physics.dt);
    // Stored states count against the cap so that enumeration memory is
    // bounded too.
    search.Charge(t.states.size());
    std::string key;
    for (Action a : t.labels) key.push_back(static_cast<char>('0' + static_cast<int>(a)));
    std::vector<size_t> &bucket = by_labels[key];
    for (size_t i : bucket) {
      if (traces[i] == t) return true;
    }
    bucket.push_back(traces.size());
    traces.push_back(std::move(t));
    return true;
  });
  std::stable_sort(traces.begin(), traces.end(), [](const Trace &a, const Trace &b) {
    return a.TickCount() < b.TickCount();
  });
  return traces;
}

FormulaValue DiamondHolds(const ProgramNode &program, const FormulaNode &goal,
                          const WorldState &state, int budget, size_t node_cap) {
  // <a>phi holds iff some run of (a ; phi?) succeeds.
  ProgramNode test;
  test.kind = Program::Kind::kTest;
  test.formula = std::shared_ptr<const FormulaNode>(std::shared_ptr<void>(), &goal);
  ProgramNode seq;
  seq.kind = Program::Kind::kSeq;
  seq.first = std::shared_ptr<const ProgramNode>(std::shared_ptr<void>(), &program);
  seq.second = std::shared_ptr<const ProgramNode>(std::shared_ptr<void>(), &test);

  Search search(state, std::max(budget, 0), node_cap, nullptr);
  bool found = false;
  search.Run(seq, [&](const LinkPtr &) {
    found = true;
    return false;
  });
  if (found) return {true, false};
  return {false, search.budget_hit() || search.undetermined()};
}

}  // namespace mosim
