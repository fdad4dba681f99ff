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

#include <optional>

#include "coordgames/dynamics.hpp"
#include "coordgames/game.hpp"
#include "coordgames/graph_classes.hpp"

namespace coordgames {

/// A directed simple cycle whose members all adopt one common colour; every
/// profitable coalition deviation from a Nash equilibrium contains one.
struct CoalitionCandidate {
  std::vector<NodeId> cycle_nodes;  // in edge order
  Colour target_colour = kNoColour;
};

/// Profitable-coalition search from a Nash equilibrium. Complete and
/// polynomial: restricting any profitable deviation to a single new-colour
/// class keeps it profitable, so it is enough to check the per-colour
/// fixpoint coalitions. Returns the one for the lowest colour that admits
/// any, or nothing when the state is a strong equilibrium. Raises a
/// precondition error when the state is not a Nash equilibrium.
std::optional<Deviation> find_profitable_coalition_from_nash(
    const Game& game, const JointStrategy& s);

/// Extracts a unicoloured directed simple cycle inside a deviation issued
/// from a Nash equilibrium (follow same-colour predecessors until they
/// repeat). Fails structurally if none exists.
CoalitionCandidate unicolour_cycle_witness(const Game& game,
                                           const JointStrategy& before,
                                           const Deviation& d);

/// Improvement run to a Nash equilibrium followed by at most one coalition
/// jump straight to the end of the monochrome escalation chain; the result
/// is a strong equilibrium.
Trace c_improve_simple_cycle(const Game& game, const CyclePayload& cycle,
                             const JointStrategy& s0,
                             const BoundConstants& bounds = kBounds);

/// Alternates coalition deviations with re-stabilisation runs. Each
/// deviation permanently settles at least one constituent cycle, so at most
/// m non-singleton steps occur.
Trace c_improve_closed_chain(const Game& game, const ChainPayload& chain,
                             const JointStrategy& s0,
                             const BoundConstants& bounds = kBounds);

/// Closes the chain with a fresh-colour four-node bridge between an interior
/// node of the first and last cycles, runs the closed-chain pipeline there
/// and maps the run back. Needs interior nodes to attach to; raises an
/// embedding error when an end cycle has none free.
Trace c_improve_open_chain(const Game& game, const ChainPayload& chain,
                           const JointStrategy& s0,
                           const BoundConstants& bounds = kBounds);

}  // namespace coordgames
