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
#include <random>
#include <string>
#include <vector>

#include "coordgames/game.hpp"
#include "coordgames/graph_classes.hpp"

namespace coordgames {

struct LabeledInstance {
  Game game;
  std::string name;
  std::optional<JointStrategy> initial;
  ClassTag expected_class = ClassTag::Other;
};

/// The fixture games: fig1 (payoff example), ex2 (weighted triangle without
/// a Nash equilibrium), ex3 (fig1 plus a closing cycle), fig3 (weighted
/// closed chain without a Nash equilibrium), fig2 (partition-cycle), ex6
/// (fig2 with two weighted bottom edges, no Nash equilibrium), fig4 (strong
/// equilibria unreachable from the marked start), and derived variants:
/// fig3_reduced / ex6_reduced (forced nodes folded into bonuses),
/// fig3_unweighted, fig4_frozen (anchored nodes pinned to their start
/// colours) and fig4_relay (weighted edges replaced by relay nodes).
LabeledInstance paper_example(const std::string& name);
std::vector<std::string> paper_example_names();

enum class GenRegime {
  Plain,              // unit weights, no bonuses
  Bonuses,            // unit weights, arbitrary bonuses
  WeightedTwoBonuses, // arbitrary weights, at most two bonus nodes
  BonusesTwoWeights,  // bonuses, at most two non-unit edges
  WeightedDistinct,   // chains: weights with distinct shared-node pairs
  TopCrossWeights,    // partition: weights on top and cross edges only
  CrossWeightsBonuses // partition: bonuses plus weights on cross edges only
};

struct GenParams {
  int num_nodes = 8;
  int num_cycles = 3;     // chains
  int min_cycle = 3;      // chains
  int max_cycle = 5;      // chains
  int num_colours = 3;
  int extra_colour_pct = 60;
  Weight max_weight = 3;
  Weight max_bonus = 2;
  GenRegime regime = GenRegime::Plain;
  int cross_pct = 40;     // partition-cycles
  int edge_pct = 30;      // dags
  uint64_t max_profiles = uint64_t(1) << 16;
};

/// Seed-deterministic instance of the requested class and regime.
LabeledInstance generate(ClassTag cls, uint64_t seed, const GenParams& params);

/// Pins the listed nodes to one colour by shrinking their colour sets.
Game freeze_nodes(const Game& game,
                  const std::vector<std::pair<NodeId, Colour>>& frozen);

/// Induced subgame: dropped neighbours turn into bonuses matching the
/// ambient colours they hold.
struct SubgameResult {
  Game game;
  std::vector<NodeId> kept;  // new id -> old id
};
SubgameResult restrict_to_subgame(const Game& game,
                                  const std::vector<NodeId>& keep,
                                  const JointStrategy& ambient);

/// Copy of the game with every edge weight set to 1.
Game unweighted_variant(const Game& game);

/// Replaces each edge of weight w != 1 by w relay nodes copying the source;
/// best-responding relays reproduce the original payoffs exactly.
struct RelayResult {
  Game game;
  std::vector<NodeId> relay_source;  // for ids >= original node count
};
RelayResult relay_unweighted_variant(const Game& game);

JointStrategy random_strategy(const Game& game, std::mt19937_64& rng);
JointStrategy lowest_colour_strategy(const Game& game);

}  // namespace coordgames
