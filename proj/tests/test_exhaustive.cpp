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

// Exhaustive certification on the smallest interesting structures: every
// colour-set pattern over {a}, {b}, {a,b} and every initial strategy. The
// chain schedulers have the most hand-stitched control flow, so they get
// the full sweep.

#include <doctest.h>

#include "coordgames/coalition.hpp"
#include "coordgames/dynamics.hpp"
#include "coordgames/instances.hpp"
#include "coordgames/oracle.hpp"
#include "helpers.hpp"

using namespace coordgames;

namespace {

// Applies fn to one game per colour-set pattern over the fixed edge set.
template <typename Fn>
void for_each_pattern(const Game& base, Fn&& fn) {
  const int n = base.num_nodes();
  std::vector<int> pattern(n, 0);
  while (true) {
    std::vector<std::vector<Colour>> sets(n);
    for (int i = 0; i < n; ++i)
      sets[i] = pattern[i] == 0   ? std::vector<Colour>{0}
                : pattern[i] == 1 ? std::vector<Colour>{1}
                                  : std::vector<Colour>{0, 1};
    fn(Game::create(n, {"a", "b"}, base.edges(), std::move(sets)));
    int carry = 0;
    while (carry < n && ++pattern[carry] == 3) pattern[carry++] = 0;
    if (carry == n) break;
  }
}

}  // namespace

TEST_CASE("closed chains settle from every start of every pattern") {
  GenParams p;
  p.num_cycles = 3;
  p.min_cycle = 3;
  p.max_cycle = 3;
  LabeledInstance shape = generate(ClassTag::ClosedChain, 1, p);
  GraphClass cls = classify(shape.game);
  const auto& chain = std::get<ChainPayload>(cls.payload);
  uint64_t runs = 0;
  for_each_pattern(shape.game, [&](const Game& g) {
    StateSpace space(g, 1 << 16);
    auto nash = enumerate_nash(g);
    JointStrategy s = space.state_at(0);
    uint64_t idx = 0;
    for (uint64_t t = 0; t < space.size(); ++t) {
      Trace tr = improve_closed_chain(g, chain, s);
      REQUIRE(tr.verdict == TerminalVerdict::Nash);
      REQUIRE(std::find(nash.begin(), nash.end(), tr.terminal) != nash.end());
      Trace tc = c_improve_closed_chain(g, chain, s);
      REQUIRE(tc.verdict == TerminalVerdict::Strong);
      REQUIRE(is_strong_equilibrium(g, tc.terminal));
      runs += 2;
      space.advance(s, idx);
    }
  });
  CHECK(runs == 8192);
}

TEST_CASE("weighted chains settle under every hub sign pattern") {
  for (int signs = 0; signs < 4; ++signs) {
    GenParams q;
    q.num_cycles = 3;
    q.min_cycle = 3;
    q.max_cycle = 3;
    LabeledInstance shape = generate(ClassTag::OpenChain, 2, q);
    GraphClass cls = classify(shape.game);
    const auto& chain = std::get<ChainPayload>(cls.payload);
    std::vector<Edge> edges = shape.game.edges();
    for (int j = 0; j + 1 < chain.num_cycles(); ++j) {
      NodeId head = chain.cycles[j][0];
      NodeId tail = chain.cycles[j].back();
      NodeId outer = chain.cycles[j + 1][chain.shared_pos[j] - 1];
      bool inner_heavier = (signs >> j) & 1;
      for (Edge& e : edges) {
        if (e.dst != head) continue;
        if (e.src == tail) e.weight = inner_heavier ? 3 : 1;
        if (e.src == outer) e.weight = inner_heavier ? 1 : 3;
      }
    }
    Game weighted_base = Game::create(
        shape.game.num_nodes(), {"a", "b"}, edges,
        std::vector<std::vector<Colour>>(shape.game.num_nodes(), {0, 1}));
    for_each_pattern(weighted_base, [&](const Game& g) {
      StateSpace space(g, 1 << 16);
      auto nash = enumerate_nash(g);
      JointStrategy s = space.state_at(0);
      uint64_t idx = 0;
      for (uint64_t t = 0; t < space.size(); ++t) {
        Trace tr = improve_open_chain(g, chain, s);
        REQUIRE(tr.verdict == TerminalVerdict::Nash);
        REQUIRE(std::find(nash.begin(), nash.end(), tr.terminal) !=
                nash.end());
        space.advance(s, idx);
      }
    });
  }
}

TEST_CASE("partition rounds settle from every start of every pattern") {
  // 6-cycle, top {0,1,2}, crosses 0->4 and 1->3 (the latter weighted)
  Game base = Game::create(
      6, {"a", "b"},
      {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 0, 1},
       {0, 4, 1}, {1, 3, 2}},
      std::vector<std::vector<Colour>>(6, {0, 1}));
  // cross weights force the splitting path as well
  GraphClass cls = classify(base);
  REQUIRE(cls.tag == ClassTag::PartitionCycle);
  const auto& part = std::get<PartitionPayload>(cls.payload);
  for_each_pattern(base, [&](const Game& g) {
    StateSpace space(g, 1 << 16);
    auto nash = enumerate_nash(g);
    JointStrategy s = space.state_at(0);
    uint64_t idx = 0;
    for (uint64_t t = 0; t < space.size(); ++t) {
      Trace tr = improve_partition_cycle(g, part, s);
      REQUIRE(tr.verdict == TerminalVerdict::Nash);
      REQUIRE(std::find(nash.begin(), nash.end(), tr.terminal) != nash.end());
      space.advance(s, idx);
    }
  });
}
