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
#include <optional>
#include <string>
#include <vector>

#include "coordgames/constants.hpp"
#include "coordgames/dynamics.hpp"
#include "coordgames/game.hpp"

namespace coordgames {

/// Mixed-radix codec for the joint strategy space: node i contributes a
/// digit indexing its sorted colour set, node 0 least significant. Fixes a
/// canonical enumeration order for every exhaustive component.
class StateSpace {
 public:
  StateSpace(const Game& game, uint64_t budget);

  uint64_t size() const { return size_; }
  uint64_t index_of(const JointStrategy& s) const;
  JointStrategy state_at(uint64_t index) const;
  void advance(JointStrategy& s, uint64_t& index) const;  // +1 in place

 private:
  const Game* game_;
  std::vector<uint64_t> stride_;
  uint64_t size_ = 1;
};

struct StateGraphReport {
  uint64_t num_states = 0;
  std::vector<uint64_t> nash_states;    // sorted state indices
  std::vector<uint64_t> strong_states;  // sorted, subset of nash_states
  bool has_fip = false;          // unilateral step relation is acyclic
  bool weakly_acyclic = false;   // every state reaches some Nash state
  std::optional<bool> c_weakly_acyclic;  // full mode only
  // shortest number of unilateral profitable steps to a Nash state
  static constexpr uint32_t kUnreachable = UINT32_MAX;
  std::vector<uint32_t> shortest_path_len;

  uint32_t max_finite_path() const;
  uint64_t unreachable_states() const;
};

enum class CoalitionMode { Singleton, Full };

struct OracleBudgets {
  uint64_t singleton = kDefaultProfileBudget;
  uint64_t full = kDefaultCoalitionProfileBudget;
};

std::vector<JointStrategy> enumerate_nash(
    const Game& game, uint64_t budget = kDefaultProfileBudget);

/// Nash states no coalition of any size can leave profitably. Uses the
/// unicolour-fixpoint pruning; enumerate_strong_unpruned is the independent
/// full-width search kept for cross-validation.
std::vector<JointStrategy> enumerate_strong(
    const Game& game, uint64_t budget = kDefaultProfileBudget);
std::vector<JointStrategy> enumerate_strong_unpruned(
    const Game& game, uint64_t budget = kDefaultCoalitionProfileBudget);

/// Exhaustive scan over every joint recolouring (no pruning at all).
bool unpruned_profitable_coalition_exists(const Game& game,
                                          const JointStrategy& s,
                                          uint64_t budget = kDefaultCoalitionProfileBudget);

StateGraphReport build_state_graph(const Game& game, CoalitionMode mode,
                                   const OracleBudgets& budgets = {});

/// Forward reachability from one state over the profitable-deviation
/// relation of the chosen mode; returns sorted state indices.
std::vector<uint64_t> forward_reachable(const Game& game,
                                        const JointStrategy& from,
                                        CoalitionMode mode,
                                        const OracleBudgets& budgets = {});

bool nash_reachable_from(const Game& game, const JointStrategy& from,
                         CoalitionMode mode, const OracleBudgets& budgets = {});

struct TraceCheck {
  bool valid = true;
  int step_index = -1;  // -1 when the problem is not tied to one step
  std::string reason;
};

/// Replays a trace: every step must be well-formed and strictly profitable
/// for all its members, recorded payoffs must match, and the terminal
/// verdict must hold for the final state.
TraceCheck verify_trace(const Game& game, const Trace& trace);

}  // namespace coordgames
