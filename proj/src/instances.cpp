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
#include "coordgames/instances.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>

namespace coordgames {

namespace {

constexpr Colour A = 0, B = 1, C = 2;

std::vector<std::string> abc() { return {"a", "b", "c"}; }

JointStrategy named(const std::vector<Colour>& v) { return v; }

LabeledInstance make_fig1() {
  std::vector<Edge> edges;
  for (auto [s, d] : std::initializer_list<std::pair<int, int>>{
           {0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}, {1, 4},
           {4, 2}, {2, 5}, {5, 0}, {6, 0}, {7, 1}, {8, 2}})
    edges.push_back({s, d, 1});
  Game g = Game::create(9, abc(), std::move(edges),
                        {{A, B}, {A, C}, {B, C}, {A, B}, {A, C}, {B, C},
                         {A}, {C}, {B}});
  return {std::move(g), "fig1", named({B, C, C, B, C, C, A, C, B}),
          ClassTag::Other};
}

LabeledInstance make_ex2() {
  Game g = Game::create(3, abc(), {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}},
                        {{A, B}, {A, C}, {B, C}},
                        {{{0, A}, 1}, {{1, C}, 1}, {{2, B}, 1}});
  return {std::move(g), "ex2", std::nullopt, ClassTag::SimpleCycle};
}

LabeledInstance make_ex3() {
  LabeledInstance base = make_fig1();
  std::vector<Edge> edges = base.game.edges();
  edges.push_back({5, 6, 1});
  edges.push_back({3, 7, 1});
  edges.push_back({4, 8, 1});
  std::vector<std::vector<Colour>> sets;
  for (NodeId i = 0; i < 9; ++i) {
    auto cs = base.game.colour_set(i);
    sets.emplace_back(cs.begin(), cs.end());
  }
  Game g = Game::create(9, abc(), std::move(edges), std::move(sets));
  return {std::move(g), "ex3", std::nullopt, ClassTag::Other};
}

LabeledInstance make_fig3() {
  Game g = Game::create(6, abc(),
                        {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}, {3, 0, 1}, {1, 3, 1},
                         {4, 1, 1}, {2, 4, 1}, {5, 2, 1}, {0, 5, 1}},
                        {{A, B}, {A, C}, {B, C}, {A}, {C}, {B}});
  return {std::move(g), "fig3", std::nullopt, ClassTag::ClosedChain};
}

LabeledInstance make_fig2() {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) edges.push_back({i, (i + 1) % 8, 1});
  for (auto [s, d] : std::initializer_list<std::pair<int, int>>{
           {0, 5}, {1, 5}, {2, 7}, {3, 6}})
    edges.push_back({s, d, 1});
  Game g = Game::create(8, abc(), std::move(edges),
                        {{B, C}, {B, C}, {B}, {C}, {A}, {A, B}, {A, C},
                         {B, C}});
  return {std::move(g), "fig2", std::nullopt, ClassTag::PartitionCycle};
}

LabeledInstance make_ex6() {
  LabeledInstance base = make_fig2();
  std::vector<Edge> edges = base.game.edges();
  for (Edge& e : edges)
    if ((e.src == 5 && e.dst == 6) || (e.src == 6 && e.dst == 7)) e.weight = 2;
  std::vector<std::vector<Colour>> sets;
  for (NodeId i = 0; i < 8; ++i) {
    auto cs = base.game.colour_set(i);
    sets.emplace_back(cs.begin(), cs.end());
  }
  Game g = Game::create(8, abc(), std::move(edges), std::move(sets));
  return {std::move(g), "ex6", std::nullopt, ClassTag::PartitionCycle};
}

LabeledInstance make_fig4() {
  std::vector<Edge> edges = {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}};
  auto both = [&](int u, int v, Weight w) {
    edges.push_back({u, v, w});
    edges.push_back({v, u, w});
  };
  // node ids: 0..8 are the numbered nodes, 9=A, 10=B, 11=C
  both(3, 0, 2);
  both(0, 4, 3);
  both(1, 5, 2);
  both(1, 6, 3);
  both(7, 2, 2);
  both(8, 2, 3);
  both(4, 9, 3);
  both(9, 5, 2);
  both(10, 3, 2);
  both(8, 10, 3);
  both(7, 11, 2);
  both(11, 6, 3);
  std::vector<std::vector<Colour>> sets(12, std::vector<Colour>{A, B, C});
  Game g = Game::create(12, abc(), std::move(edges), std::move(sets));
  return {std::move(g), "fig4",
          named({A, A, B, B, A, A, C, C, B, A, B, C}), ClassTag::Other};
}

LabeledInstance make_fig4_frozen() {
  LabeledInstance base = make_fig4();
  std::vector<std::pair<NodeId, Colour>> frozen;
  for (NodeId i = 3; i < 12; ++i) frozen.emplace_back(i, (*base.initial)[i]);
  Game g = freeze_nodes(base.game, frozen);
  return {std::move(g), "fig4_frozen", base.initial, ClassTag::Other};
}

LabeledInstance make_fig4_relay() {
  LabeledInstance base = make_fig4();
  RelayResult relay = relay_unweighted_variant(base.game);
  JointStrategy init = *base.initial;
  for (size_t r = 0; r < relay.relay_source.size(); ++r)
    init.push_back(init[relay.relay_source[r]]);
  return {std::move(relay.game), "fig4_relay", std::move(init),
          ClassTag::Other};
}

LabeledInstance make_fig3_reduced() {
  LabeledInstance base = make_fig3();
  SubgameResult sub =
      restrict_to_subgame(base.game, {0, 1, 2}, named({A, A, B, A, C, B}));
  return {std::move(sub.game), "fig3_reduced", std::nullopt,
          ClassTag::SimpleCycle};
}

LabeledInstance make_ex6_reduced() {
  LabeledInstance base = make_ex6();
  SubgameResult sub = restrict_to_subgame(base.game, {0, 1, 5, 6, 7},
                                          named({B, B, B, C, A, A, A, B}));
  return {std::move(sub.game), "ex6_reduced", std::nullopt,
          ClassTag::PartitionCycle};
}

LabeledInstance make_fig3_unweighted() {
  LabeledInstance base = make_fig3();
  Game g = unweighted_variant(base.game);
  return {std::move(g), "fig3_unweighted", std::nullopt,
          ClassTag::ClosedChain};
}

}  // namespace

std::vector<std::string> paper_example_names() {
  return {"fig1", "ex2",  "ex3",  "fig3", "fig2", "ex6",
          "fig4", "fig3_reduced", "fig3_unweighted", "ex6_reduced",
          "fig4_frozen", "fig4_relay"};
}

LabeledInstance paper_example(const std::string& name) {
  if (name == "fig1") return make_fig1();
  if (name == "ex2") return make_ex2();
  if (name == "ex3") return make_ex3();
  if (name == "fig3") return make_fig3();
  if (name == "fig2") return make_fig2();
  if (name == "ex6") return make_ex6();
  if (name == "fig4") return make_fig4();
  if (name == "fig3_reduced") return make_fig3_reduced();
  if (name == "fig3_unweighted") return make_fig3_unweighted();
  if (name == "ex6_reduced") return make_ex6_reduced();
  if (name == "fig4_frozen") return make_fig4_frozen();
  if (name == "fig4_relay") return make_fig4_relay();
  fail(ErrorKind::Lookup, "unknown fixture name: " + name);
}

Game freeze_nodes(const Game& game,
                  const std::vector<std::pair<NodeId, Colour>>& frozen) {
  std::vector<std::vector<Colour>> sets(game.num_nodes());
  for (NodeId i = 0; i < game.num_nodes(); ++i) {
    auto cs = game.colour_set(i);
    sets[i].assign(cs.begin(), cs.end());
  }
  for (auto [node, colour] : frozen) {
    if (node < 0 || node >= game.num_nodes() || !game.has_colour(node, colour))
      fail(ErrorKind::Structural, "cannot freeze node to that colour");
    sets[node] = {colour};
  }
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;
  for (NodeId i = 0; i < game.num_nodes(); ++i)
    for (const auto& [c, w] : game.bonuses_of(i)) {
      if (std::find(sets[i].begin(), sets[i].end(), c) == sets[i].end())
        continue;
      bonuses.push_back({{i, c}, w});
    }
  return Game::create(game.num_nodes(), game.colour_names(), game.edges(),
                      std::move(sets), std::move(bonuses));
}

SubgameResult restrict_to_subgame(const Game& game,
                                  const std::vector<NodeId>& keep,
                                  const JointStrategy& ambient) {
  validate_strategy(game, ambient);
  std::vector<NodeId> remap(game.num_nodes(), -1);
  for (size_t t = 0; t < keep.size(); ++t) remap[keep[t]] = NodeId(t);

  std::vector<Edge> edges;
  std::map<std::pair<NodeId, Colour>, Weight> bonus;
  std::vector<std::vector<Colour>> sets(keep.size());
  for (size_t t = 0; t < keep.size(); ++t) {
    auto cs = game.colour_set(keep[t]);
    sets[t].assign(cs.begin(), cs.end());
    for (const auto& [c, w] : game.bonuses_of(keep[t]))
      bonus[{NodeId(t), c}] += w;
  }
  for (const Edge& e : game.edges()) {
    if (remap[e.dst] < 0) continue;
    if (remap[e.src] >= 0) {
      edges.push_back({remap[e.src], remap[e.dst], e.weight});
    } else if (game.has_colour(e.dst, ambient[e.src])) {
      // a dropped neighbour stuck on its ambient colour acts as a bonus
      bonus[{remap[e.dst], ambient[e.src]}] += e.weight;
    }
  }
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses(
      bonus.begin(), bonus.end());
  SubgameResult out;
  out.kept = keep;
  out.game = Game::create(static_cast<int>(keep.size()), game.colour_names(),
                          std::move(edges), std::move(sets),
                          std::move(bonuses));
  return out;
}

Game unweighted_variant(const Game& game) {
  std::vector<Edge> edges = game.edges();
  for (Edge& e : edges) e.weight = 1;
  std::vector<std::vector<Colour>> sets(game.num_nodes());
  for (NodeId i = 0; i < game.num_nodes(); ++i) {
    auto cs = game.colour_set(i);
    sets[i].assign(cs.begin(), cs.end());
  }
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;
  for (NodeId i = 0; i < game.num_nodes(); ++i)
    for (const auto& [c, w] : game.bonuses_of(i)) bonuses.push_back({{i, c}, w});
  return Game::create(game.num_nodes(), game.colour_names(), std::move(edges),
                      std::move(sets), std::move(bonuses));
}

RelayResult relay_unweighted_variant(const Game& game) {
  std::vector<Edge> edges;
  RelayResult out;
  NodeId next = game.num_nodes();
  std::vector<std::vector<Colour>> sets(game.num_nodes());
  for (NodeId i = 0; i < game.num_nodes(); ++i) {
    auto cs = game.colour_set(i);
    sets[i].assign(cs.begin(), cs.end());
  }
  for (const Edge& e : game.edges()) {
    if (e.weight == 1) {
      edges.push_back(e);
      continue;
    }
    for (Weight w = 0; w < e.weight; ++w) {
      NodeId relay = next++;
      out.relay_source.push_back(e.src);
      sets.push_back(sets[e.src]);
      edges.push_back({e.src, relay, 1});
      edges.push_back({relay, e.dst, 1});
    }
  }
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;
  for (NodeId i = 0; i < game.num_nodes(); ++i)
    for (const auto& [c, w] : game.bonuses_of(i)) bonuses.push_back({{i, c}, w});
  out.game = Game::create(next, game.colour_names(), std::move(edges),
                          std::move(sets), std::move(bonuses));
  return out;
}

JointStrategy random_strategy(const Game& game, std::mt19937_64& rng) {
  JointStrategy s(game.num_nodes());
  for (NodeId i = 0; i < game.num_nodes(); ++i) {
    auto cs = game.colour_set(i);
    s[i] = cs[rng() % cs.size()];
  }
  return s;
}

JointStrategy lowest_colour_strategy(const Game& game) {
  JointStrategy s(game.num_nodes());
  for (NodeId i = 0; i < game.num_nodes(); ++i) s[i] = game.colour_set(i)[0];
  return s;
}

namespace {

int rand_pct(std::mt19937_64& rng) { return int(rng() % 100); }

Weight rand_weight(std::mt19937_64& rng, Weight lo, Weight hi) {
  if (hi <= lo) return lo;
  return lo + Weight(rng() % uint64_t(hi - lo + 1));
}

std::vector<std::string> abc_names(const GenParams& p) {
  std::vector<std::string> names;
  for (int c = 0; c < p.num_colours; ++c)
    names.push_back(std::string(1, char('a' + c % 26)) +
                    (c >= 26 ? std::to_string(c / 26) : ""));
  return names;
}

std::vector<std::vector<Colour>> gen_colour_sets(std::mt19937_64& rng, int n,
                                                 const GenParams& p) {
  std::vector<std::vector<Colour>> sets(n);
  for (int i = 0; i < n; ++i) {
    Colour base = Colour(rng() % p.num_colours);
    sets[i].push_back(base);
    for (Colour c = 0; c < p.num_colours; ++c)
      if (c != base && rand_pct(rng) < p.extra_colour_pct) sets[i].push_back(c);
    std::sort(sets[i].begin(), sets[i].end());
  }
  // trim front to back so the profile count fits the budget
  uint64_t running = 1;
  for (int i = 0; i < n; ++i) {
    while (sets[i].size() > 1 && running > p.max_profiles / sets[i].size())
      sets[i].pop_back();
    running *= sets[i].size();
  }
  return sets;
}

void gen_bonuses(std::mt19937_64& rng, const GenParams& p,
                 const std::vector<std::vector<Colour>>& sets,
                 const std::vector<NodeId>& nodes,
                 std::vector<std::pair<std::pair<NodeId, Colour>, Weight>>* out) {
  for (NodeId i : nodes) {
    if (rand_pct(rng) >= 50) continue;
    for (Colour c : sets[i])
      if (rand_pct(rng) < 50) {
        Weight w = rand_weight(rng, 0, p.max_bonus);
        if (w > 0) out->push_back({{i, c}, w});
      }
  }
}

LabeledInstance gen_dag(uint64_t seed, const GenParams& p) {
  std::mt19937_64 rng(seed);
  const int n = p.num_nodes;
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng() % uint64_t(i + 1)]);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rand_pct(rng) < p.edge_pct)
        edges.push_back({order[a], order[b],
                         rand_weight(rng, 1, p.max_weight)});
  auto sets = gen_colour_sets(rng, n, p);
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), 0);
  gen_bonuses(rng, p, sets, all, &bonuses);
  Game g = Game::create(n, abc_names(p), std::move(edges), std::move(sets),
                        std::move(bonuses));
  return {std::move(g), "gen-dag", std::nullopt, ClassTag::Dag};
}

LabeledInstance gen_simple_cycle(uint64_t seed, const GenParams& p) {
  std::mt19937_64 rng(seed);
  const int n = std::max(p.num_nodes, 2);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
  auto sets = gen_colour_sets(rng, n, p);
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;

  switch (p.regime) {
    case GenRegime::Plain:
      break;
    case GenRegime::Bonuses: {
      std::vector<NodeId> all(n);
      std::iota(all.begin(), all.end(), 0);
      gen_bonuses(rng, p, sets, all, &bonuses);
      break;
    }
    case GenRegime::WeightedTwoBonuses: {
      for (Edge& e : edges) e.weight = rand_weight(rng, 1, p.max_weight);
      std::vector<NodeId> rich;
      for (int i = 0; i < n; ++i)
        if (sets[i].size() >= 2) rich.push_back(i);
      int nb = int(rng() % 3);
      for (int t = 0; t < nb && !rich.empty(); ++t) {
        NodeId i = rich[rng() % rich.size()];
        bonuses.push_back({{i, sets[i][0]},
                           rand_weight(rng, 1, std::max<Weight>(p.max_bonus, 1))});
        rich.erase(std::remove(rich.begin(), rich.end(), i), rich.end());
      }
      break;
    }
    case GenRegime::BonusesTwoWeights: {
      int heavy = int(rng() % 3);
      for (int t = 0; t < heavy; ++t)
        edges[rng() % edges.size()].weight =
            rand_weight(rng, 2, std::max<Weight>(p.max_weight, 2));
      std::vector<NodeId> all(n);
      std::iota(all.begin(), all.end(), 0);
      gen_bonuses(rng, p, sets, all, &bonuses);
      break;
    }
    default:
      fail(ErrorKind::Generation, "regime does not apply to simple cycles");
  }
  Game g = Game::create(n, abc_names(p), std::move(edges), std::move(sets),
                        std::move(bonuses));
  return {std::move(g), "gen-cycle", std::nullopt, ClassTag::SimpleCycle};
}

struct ChainShape {
  std::vector<std::vector<NodeId>> cycles;
  int total_nodes = 0;
};

// Open chain: cycle j+1 absorbs cycle j's head at a random non-head slot.
ChainShape chain_shape_open(std::mt19937_64& rng, const GenParams& p) {
  ChainShape shape;
  const int m = std::max(p.num_cycles, 2);
  NodeId next = 0;
  for (int j = 0; j < m; ++j) {
    int size = p.min_cycle +
               int(rng() % uint64_t(p.max_cycle - p.min_cycle + 1));
    std::vector<NodeId> cyc;
    int hub_pos = -1;
    if (j > 0) hub_pos = 1 + int(rng() % uint64_t(size - 1));
    for (int t = 0; t < size; ++t) {
      if (t == hub_pos)
        cyc.push_back(shape.cycles[j - 1][0]);
      else
        cyc.push_back(next++);
    }
    shape.cycles.push_back(std::move(cyc));
  }
  shape.total_nodes = next;
  return shape;
}

ChainShape chain_shape_closed(std::mt19937_64& rng, const GenParams& p) {
  ChainShape shape;
  const int m = std::max(p.num_cycles, 3);
  NodeId next = 0;
  std::vector<NodeId> hubs(m);
  for (int j = 0; j < m; ++j) hubs[j] = next++;
  for (int j = 0; j < m; ++j) {
    int size = p.min_cycle +
               int(rng() % uint64_t(p.max_cycle - p.min_cycle + 1));
    NodeId prev_hub = hubs[(j + m - 1) % m];
    int hub_pos = 1 + int(rng() % uint64_t(size - 1));
    std::vector<NodeId> cyc;
    for (int t = 0; t < size; ++t) {
      if (t == 0)
        cyc.push_back(hubs[j]);
      else if (t == hub_pos)
        cyc.push_back(prev_hub);
      else
        cyc.push_back(next++);
    }
    shape.cycles.push_back(std::move(cyc));
  }
  shape.total_nodes = next;
  return shape;
}

LabeledInstance gen_chain(ClassTag cls, uint64_t seed, const GenParams& p) {
  std::mt19937_64 rng(seed);
  const bool closed = cls == ClassTag::ClosedChain;
  ChainShape shape =
      closed ? chain_shape_closed(rng, p) : chain_shape_open(rng, p);
  const int n = shape.total_nodes;

  std::map<std::pair<NodeId, NodeId>, Weight> edge_w;
  for (const auto& cyc : shape.cycles)
    for (size_t t = 0; t < cyc.size(); ++t)
      edge_w[{cyc[t], cyc[(t + 1) % cyc.size()]}] = 1;

  if (p.regime == GenRegime::WeightedDistinct) {
    if (closed)
      fail(ErrorKind::Generation,
           "weighted closed chains are not a supported regime");
    for (auto& [key, w] : edge_w) w = rand_weight(rng, 1, p.max_weight);
    // shared nodes need distinct inner/outer weights
    const int m = static_cast<int>(shape.cycles.size());
    for (int j = 0; j + 1 < m; ++j) {
      const auto& cyc = shape.cycles[j];
      const auto& next_cyc = shape.cycles[j + 1];
      NodeId head = cyc[0];
      int pos = 0;
      for (int t = 0; t < static_cast<int>(next_cyc.size()); ++t)
        if (next_cyc[t] == head) pos = t;
      auto inner = edge_w.find({cyc.back(), head});
      auto outer = edge_w.find({next_cyc[pos - 1], head});
      while (inner->second == outer->second) ++inner->second;
    }
  } else if (p.regime != GenRegime::Plain) {
    fail(ErrorKind::Generation, "regime does not apply to chains");
  }

  std::vector<Edge> edges;
  for (const auto& [key, w] : edge_w) edges.push_back({key.first, key.second, w});
  auto sets = gen_colour_sets(rng, n, p);
  Game g = Game::create(n, abc_names(p), std::move(edges), std::move(sets));
  return {std::move(g), closed ? "gen-closed-chain" : "gen-open-chain",
          std::nullopt, cls};
}

LabeledInstance gen_partition(uint64_t seed, const GenParams& p) {
  std::mt19937_64 rng(seed);
  const int n = std::max(p.num_nodes, 3);
  const int k = 1 + int(rng() % uint64_t(n - 2));  // both sides non-empty
  std::vector<Edge> cycle_edges, cross_edges;
  for (int i = 0; i < n; ++i) cycle_edges.push_back({i, (i + 1) % n, 1});
  std::set<std::pair<int, int>> used;
  for (int u = 0; u < k; ++u) {
    if (rand_pct(rng) >= p.cross_pct) continue;
    int fanout = 1 + int(rng() % 2);
    for (int t = 0; t < fanout; ++t) {
      int v = k + int(rng() % uint64_t(n - k));
      if (v == u + 1) continue;  // would duplicate the cycle edge
      if (used.insert({u, v}).second) cross_edges.push_back({u, v, 1});
    }
  }
  if (cross_edges.empty()) {
    int v = k + int(rng() % uint64_t(n - k));
    if (v == 1) v = k + 1;  // 0 -> 1 would double the cycle edge
    cross_edges.push_back({0, v, 1});
  }

  auto sets = gen_colour_sets(rng, n, p);
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;
  bool want_bonus = p.regime == GenRegime::Bonuses ||
                    p.regime == GenRegime::CrossWeightsBonuses;
  if (want_bonus) {
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), 0);
    gen_bonuses(rng, p, sets, all, &bonuses);
  }
  switch (p.regime) {
    case GenRegime::Plain:
    case GenRegime::Bonuses:
      break;
    case GenRegime::TopCrossWeights:
      for (Edge& e : cycle_edges)
        if (e.src < k && e.dst < k) e.weight = rand_weight(rng, 1, p.max_weight);
      for (Edge& e : cross_edges) e.weight = rand_weight(rng, 1, p.max_weight);
      break;
    case GenRegime::CrossWeightsBonuses:
      for (Edge& e : cross_edges) e.weight = rand_weight(rng, 1, p.max_weight);
      break;
    default:
      fail(ErrorKind::Generation, "regime does not apply to partition-cycles");
  }

  std::vector<Edge> edges = cycle_edges;
  edges.insert(edges.end(), cross_edges.begin(), cross_edges.end());
  Game g = Game::create(n, abc_names(p), std::move(edges), std::move(sets),
                        std::move(bonuses));
  return {std::move(g), "gen-partition", std::nullopt,
          ClassTag::PartitionCycle};
}

}  // namespace

LabeledInstance generate(ClassTag cls, uint64_t seed, const GenParams& p) {
  switch (cls) {
    case ClassTag::Dag: return gen_dag(seed, p);
    case ClassTag::SimpleCycle: return gen_simple_cycle(seed, p);
    case ClassTag::OpenChain:
    case ClassTag::ClosedChain: return gen_chain(cls, seed, p);
    case ClassTag::PartitionCycle: return gen_partition(seed, p);
    case ClassTag::Other:
      break;
  }
  fail(ErrorKind::Generation, "no generator for this class");
}

}  // namespace coordgames
