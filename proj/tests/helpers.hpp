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

#include <random>
#include <string>
#include <vector>

#include "coordgames/game.hpp"

namespace coordgames::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(COORDGAMES_SOURCE_DIR) + "/fixtures/v1/" + name + ".json";
}

/// Independent payoff oracle: a naive double loop over the full edge list,
/// kept deliberately separate from Game's adjacency structures.
inline Weight recount_payoff(const Game& game, const JointStrategy& s,
                             NodeId i) {
  Weight total = 0;
  for (const Edge& e : game.edges())
    if (e.dst == i && s[e.src] == s[i]) total += e.weight;
  for (Colour c : game.colour_set(i))
    if (c == s[i]) total += game.bonus(i, c);
  return total;
}

/// Arbitrary random digraph game (any class, usually Other).
inline Game random_game(std::mt19937_64& rng, int n, int colours = 3,
                        int edge_pct = 40, Weight max_weight = 3,
                        Weight max_bonus = 2) {
  std::vector<Edge> edges;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = 0; b < n; ++b) {
      if (a == b) continue;
      if (int(rng() % 100) < edge_pct)
        edges.push_back({a, b, Weight(1 + rng() % uint64_t(max_weight))});
    }
  std::vector<std::string> names;
  for (int c = 0; c < colours; ++c) names.push_back(std::string(1, 'a' + c));
  std::vector<std::vector<Colour>> sets(n);
  for (NodeId i = 0; i < n; ++i) {
    Colour base = Colour(rng() % colours);
    sets[i].push_back(base);
    for (Colour c = 0; c < colours; ++c)
      if (c != base && rng() % 100 < 50) sets[i].push_back(c);
    std::sort(sets[i].begin(), sets[i].end());
  }
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;
  for (NodeId i = 0; i < n; ++i)
    for (Colour c : sets[i])
      if (rng() % 100 < 25) {
        Weight w = Weight(rng() % uint64_t(max_bonus + 1));
        if (w > 0) bonuses.push_back({{i, c}, w});
      }
  return Game::create(n, std::move(names), std::move(edges), std::move(sets),
                      std::move(bonuses));
}

inline JointStrategy random_state(const Game& game, std::mt19937_64& rng) {
  JointStrategy s(game.num_nodes());
  for (NodeId i = 0; i < game.num_nodes(); ++i) {
    auto cs = game.colour_set(i);
    s[i] = cs[rng() % cs.size()];
  }
  return s;
}

}  // namespace coordgames::testing
