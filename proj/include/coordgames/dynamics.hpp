/*
 * Copyright 2026 The coordgames authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coordgames/constants.hpp"
#include "coordgames/game.hpp"
#include "coordgames/graph_classes.hpp"

namespace coordgames {

enum class TieBreakPolicy {
  PreferCurrent,
  PreferPredecessorColour,
  PolicyP1,  // favour the colour most common among the node's cross sources
  PolicyP2,  // favour the node's highest-bonus colours
  PolicyP3,  // favour colours maximising bonus plus cross support
  LowestColourId,
};

/// Extra inputs some tie policies need. The partition pointer is required
/// for P1/P2/P3; using them without it is a context error.
struct TieBreakContext {
  NodeId predecessor = -1;  // the node's unique cycle predecessor
  const PartitionPayload* partition = nullptr;
};

/// If the node already plays a best response, returns (s, false). Otherwise
/// moves it to the tie-broken best response.
std::pair<JointStrategy, bool> step_best_response(const Game& game,
                                                  const JointStrategy& s,
                                                  NodeId i,
                                                  TieBreakPolicy policy,
                                                  const TieBreakContext& ctx);

enum class TerminalVerdict { Nash, Strong, Budget, CycleDetected };

std::string to_string(TerminalVerdict v);

struct TraceStep {
  Deviation deviation;
  // payoff of each coalition member before/after, aligned with moves
  std::vector<std::pair<Weight, Weight>> member_payoffs;
};

struct TraceMeasures {
  std::string regime;
  bool experimental = false;        // schedule not backed by a proved bound
  uint64_t bound_cap = 0;           // asserted step bound for the regime
  std::vector<int> guard_values;    // per phase, chain schedulers
  std::vector<int> stable_cycles;   // per phase, chain schedulers
  std::vector<size_t> phase_ends;   // step count at each recorded phase end
  std::vector<int> x_sizes;         // per round, partition schedulers
  int expanded_nodes = 0;           // after cross-edge splitting
  int expanded_top = 0;
};

/// A replayable run: applying the steps in order from `initial` must
/// reproduce `terminal`, every step profitable for all its members.
struct Trace {
  JointStrategy initial;
  std::vector<TraceStep> steps;
  JointStrategy terminal;
  TerminalVerdict verdict = TerminalVerdict::Nash;
  TraceMeasures measures;

  size_t num_steps() const { return steps.size(); }
  int coalition_steps() const;  // steps with more than one member
};

/// Incrementally builds a trace while owning the evolving strategy. Each run
/// owns its builder exclusively; the game itself is shared and immutable.
class TraceBuilder {
 public:
  TraceBuilder(const Game& game, JointStrategy initial, uint64_t step_cap);

  const JointStrategy& state() const { return s_; }
  bool over_budget() const { return over_; }
  size_t steps() const { return steps_.size(); }

  /// Applies one singleton step; false once the step cap is reached.
  bool apply(NodeId node, Colour to);
  bool apply(const Deviation& d);

  Trace finish(TerminalVerdict verdict, TraceMeasures measures = {});

 private:
  const Game& game_;
  JointStrategy initial_;
  JointStrategy s_;
  std::vector<TraceStep> steps_;
  uint64_t cap_;
  bool over_ = false;
};

/// One pass in topological order; ends in a Nash equilibrium with at most
/// one step per node.
Trace improve_dag(const Game& game, const DagPayload& dag,
                  const JointStrategy& s0,
                  const BoundConstants& bounds = kBounds);

/// Cyclic best-response rounds. Handles three regimes: unweighted edges with
/// arbitrary bonuses, arbitrary weights with at most two bonus nodes, and
/// bonuses with at most two non-unit edges. Anything else has no guarantee
/// (three weighted edges plus three bonus nodes already admits games without
/// any Nash equilibrium) and raises a not-guaranteed error.
Trace improve_simple_cycle(const Game& game, const CyclePayload& cycle,
                           const JointStrategy& s0,
                           const BoundConstants& bounds = kBounds);

/// Unweighted chains run cycle-local rounds picking the least unstable cycle;
/// weighted no-bonus chains decompose into blocks of consistently ordered
/// shared-edge weights and run ascending or descending per block. Chains
/// mixing non-unit weights with bonuses have no guarantee.
Trace improve_open_chain(const Game& game, const ChainPayload& chain,
                         const JointStrategy& s0,
                         const BoundConstants& bounds = kBounds);

/// Unweighted closed chains only: stabilises the opened chain, then the
/// closing cycle, then propagates in reverse cycle order until stable.
Trace improve_closed_chain(const Game& game, const ChainPayload& chain,
                           const JointStrategy& s0,
                           const BoundConstants& bounds = kBounds);

/// Cyclic rounds with the P1 (no bonuses) or P2/P3 (bonuses) tie policies.
/// Weighted cross edges are split into unit edges first and the resulting
/// trace is pulled back; weights on bottom-path cycle edges void the
/// guarantee and raise a not-guaranteed error.
Trace improve_partition_cycle(const Game& game, const PartitionPayload& part,
                              const JointStrategy& s0,
                              const BoundConstants& bounds = kBounds);

/// Picks one of the currently profitable unilateral deviations uniformly at
/// random each step. Reproducible from the seed.
Trace run_fair_random(const Game& game, const JointStrategy& s0, uint64_t seed,
                      uint64_t step_budget);

/// Dispatches to the scheduler matching the classification.
Trace solve_by_class(const Game& game, const GraphClass& cls,
                     const JointStrategy& s0,
                     const BoundConstants& bounds = kBounds);

/// Break-point progress measure of the unweighted chain schedulers: the
/// largest j such that cycles 1..j are all stable and cycle j's head matches
/// its in-cycle predecessor. 0 when there is none.
int chain_guard(const Game& game, const ChainPayload& chain,
                const JointStrategy& s);
int count_stable_cycles(const Game& game, const ChainPayload& chain,
                        const JointStrategy& s);

}  // namespace coordgames
