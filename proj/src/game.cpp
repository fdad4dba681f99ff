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
#include "coordgames/game.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace coordgames {

std::vector<NodeId> Deviation::coalition() const {
  std::vector<NodeId> out;
  out.reserve(moves.size());
  for (const auto& [node, colour] : moves) out.push_back(node);
  return out;
}

Game Game::create(
    int num_nodes, std::vector<std::string> colour_names,
    std::vector<Edge> edges, std::vector<std::vector<Colour>> colour_sets,
    std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses) {
  if (num_nodes <= 0) fail(ErrorKind::Structural, "game needs at least one node");
  if (colour_names.empty())
    fail(ErrorKind::Structural, "game needs at least one colour");
  {
    std::set<std::string> seen(colour_names.begin(), colour_names.end());
    if (static_cast<int>(seen.size()) != static_cast<int>(colour_names.size()))
      fail(ErrorKind::Structural, "duplicate colour name");
  }
  const int num_colours = static_cast<int>(colour_names.size());

  auto check_node = [&](NodeId i, const char* what) {
    if (i < 0 || i >= num_nodes)
      fail(ErrorKind::Structural,
           std::string(what) + ": node id " + std::to_string(i) +
               " out of range");
  };
  auto check_colour = [&](Colour c, const char* what) {
    if (c < 0 || c >= num_colours)
      fail(ErrorKind::Structural,
           std::string(what) + ": colour id " + std::to_string(c) +
               " out of range");
  };

  std::set<std::pair<NodeId, NodeId>> edge_keys;
  for (const Edge& e : edges) {
    check_node(e.src, "edge");
    check_node(e.dst, "edge");
    if (e.src == e.dst)
      fail(ErrorKind::Structural,
           "self loop at node " + std::to_string(e.src));
    if (e.weight < 0)
      fail(ErrorKind::Structural, "negative edge weight");
    if (!edge_keys.insert({e.src, e.dst}).second)
      fail(ErrorKind::Structural,
           "parallel edge " + std::to_string(e.src) + "->" +
               std::to_string(e.dst));
  }

  if (static_cast<int>(colour_sets.size()) != num_nodes)
    fail(ErrorKind::Structural, "colour_sets must list every node");
  for (int i = 0; i < num_nodes; ++i) {
    if (colour_sets[i].empty())
      fail(ErrorKind::Structural,
           "empty colour set at node " + std::to_string(i));
    std::sort(colour_sets[i].begin(), colour_sets[i].end());
    if (std::adjacent_find(colour_sets[i].begin(), colour_sets[i].end()) !=
        colour_sets[i].end())
      fail(ErrorKind::Structural,
           "duplicate colour in set of node " + std::to_string(i));
    for (Colour c : colour_sets[i]) check_colour(c, "colour set");
  }

  // Bonus table, with the per-node shift to non-negative values. A constant
  // shift of a node's whole bonus vector cannot change any best response.
  std::vector<std::map<Colour, Weight>> bonus_map(num_nodes);
  for (const auto& [key, value] : bonuses) {
    auto [node, colour] = key;
    check_node(node, "bonus");
    check_colour(colour, "bonus");
    if (!std::binary_search(colour_sets[node].begin(),
                            colour_sets[node].end(), colour))
      fail(ErrorKind::Structural,
           "bonus colour not available to node " + std::to_string(node));
    if (!bonus_map[node].emplace(colour, value).second)
      fail(ErrorKind::Structural,
           "duplicate bonus entry for node " + std::to_string(node));
  }
  for (int i = 0; i < num_nodes; ++i) {
    if (bonus_map[i].empty()) continue;
    // Colours without an entry default to 0, so they take part in the
    // minimum as well.
    Weight lo = bonus_map[i].size() < colour_sets[i].size() ? 0
                : bonus_map[i].begin()->second;
    for (const auto& [c, w] : bonus_map[i]) lo = std::min(lo, w);
    if (lo < 0) {
      for (Colour c : colour_sets[i]) {
        auto it = bonus_map[i].find(c);
        Weight w = (it == bonus_map[i].end()) ? 0 : it->second;
        bonus_map[i][c] = w - lo;
      }
    }
  }

  Game g;
  g.num_nodes_ = num_nodes;
  g.colour_names_ = std::move(colour_names);
  g.edges_ = std::move(edges);

  g.in_off_.assign(num_nodes + 1, 0);
  g.out_off_.assign(num_nodes + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.in_off_[e.dst + 1];
    ++g.out_off_[e.src + 1];
  }
  for (int i = 0; i < num_nodes; ++i) {
    g.in_off_[i + 1] += g.in_off_[i];
    g.out_off_[i + 1] += g.out_off_[i];
  }
  g.in_edges_.resize(g.edges_.size());
  g.out_edges_.resize(g.edges_.size());
  std::vector<int> in_pos(g.in_off_.begin(), g.in_off_.end() - 1);
  std::vector<int> out_pos(g.out_off_.begin(), g.out_off_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.in_edges_[in_pos[e.dst]++] = e;
    g.out_edges_[out_pos[e.src]++] = e;
  }

  g.cs_off_.assign(num_nodes + 1, 0);
  for (int i = 0; i < num_nodes; ++i)
    g.cs_off_[i + 1] = g.cs_off_[i] + static_cast<int>(colour_sets[i].size());
  g.cs_vals_.reserve(g.cs_off_[num_nodes]);
  for (int i = 0; i < num_nodes; ++i)
    g.cs_vals_.insert(g.cs_vals_.end(), colour_sets[i].begin(),
                      colour_sets[i].end());

  g.bonus_off_.assign(num_nodes + 1, 0);
  for (int i = 0; i < num_nodes; ++i)
    g.bonus_off_[i + 1] =
        g.bonus_off_[i] + static_cast<int>(bonus_map[i].size());
  g.bonus_vals_.reserve(g.bonus_off_[num_nodes]);
  for (int i = 0; i < num_nodes; ++i)
    for (const auto& [c, w] : bonus_map[i]) g.bonus_vals_.emplace_back(c, w);

  return g;
}

std::span<const Edge> Game::in_edges(NodeId i) const {
  return {in_edges_.data() + in_off_[i],
          static_cast<size_t>(in_off_[i + 1] - in_off_[i])};
}

std::span<const Edge> Game::out_edges(NodeId i) const {
  return {out_edges_.data() + out_off_[i],
          static_cast<size_t>(out_off_[i + 1] - out_off_[i])};
}

std::span<const Colour> Game::colour_set(NodeId i) const {
  return {cs_vals_.data() + cs_off_[i],
          static_cast<size_t>(cs_off_[i + 1] - cs_off_[i])};
}

bool Game::has_colour(NodeId i, Colour c) const {
  auto cs = colour_set(i);
  return std::binary_search(cs.begin(), cs.end(), c);
}

Weight Game::bonus(NodeId i, Colour c) const {
  auto bs = bonuses_of(i);
  auto it = std::lower_bound(
      bs.begin(), bs.end(), c,
      [](const std::pair<Colour, Weight>& p, Colour x) { return p.first < x; });
  if (it != bs.end() && it->first == c) return it->second;
  return 0;
}

std::span<const std::pair<Colour, Weight>> Game::bonuses_of(NodeId i) const {
  return {bonus_vals_.data() + bonus_off_[i],
          static_cast<size_t>(bonus_off_[i + 1] - bonus_off_[i])};
}

std::optional<Colour> Game::find_colour(std::string_view name) const {
  for (Colour c = 0; c < num_colours(); ++c)
    if (colour_names_[c] == name) return c;
  return std::nullopt;
}

uint64_t Game::num_profiles() const {
  constexpr uint64_t kCap = uint64_t(1) << 62;
  uint64_t total = 1;
  for (int i = 0; i < num_nodes_; ++i) {
    uint64_t k = colour_set(i).size();
    if (total > kCap / k) return kCap;
    total *= k;
  }
  return total;
}

bool Game::has_effective_bonus(NodeId i) const {
  auto cs = colour_set(i);
  Weight first = bonus(i, cs[0]);
  for (Colour c : cs)
    if (bonus(i, c) != first) return true;
  return false;
}

int Game::count_effective_bonus_nodes() const {
  int count = 0;
  for (NodeId i = 0; i < num_nodes_; ++i)
    if (has_effective_bonus(i)) ++count;
  return count;
}

int Game::count_nontrivial_weight_edges() const {
  int count = 0;
  for (const Edge& e : edges_)
    if (e.weight != 1) ++count;
  return count;
}

bool Game::unweighted() const { return count_nontrivial_weight_edges() == 0; }

void validate_strategy(const Game& game, const JointStrategy& s) {
  if (static_cast<int>(s.size()) != game.num_nodes())
    fail(ErrorKind::Structural, "strategy length does not match node count");
  for (NodeId i = 0; i < game.num_nodes(); ++i)
    if (!game.has_colour(i, s[i]))
      fail(ErrorKind::Structural,
           "node " + std::to_string(i) + " plays a colour outside its set");
}

Weight payoff(const Game& game, const JointStrategy& s, NodeId i) {
  if (i < 0 || i >= game.num_nodes())
    fail(ErrorKind::Structural, "payoff: node id out of range");
  if (static_cast<int>(s.size()) != game.num_nodes())
    fail(ErrorKind::Structural, "payoff: strategy length mismatch");
  return payoff_if(game, s, i, s[i]);
}

Weight payoff_if(const Game& game, const JointStrategy& s, NodeId i,
                 Colour c) {
  Weight total = game.bonus(i, c);
  for (const Edge& e : game.in_edges(i))
    if (s[e.src] == c) total += e.weight;
  return total;
}

std::vector<Colour> best_responses(const Game& game, const JointStrategy& s,
                                   NodeId i) {
  auto cs = game.colour_set(i);
  Weight best = payoff_if(game, s, i, cs[0]);
  for (Colour c : cs) best = std::max(best, payoff_if(game, s, i, c));
  std::vector<Colour> out;
  for (Colour c : cs)
    if (payoff_if(game, s, i, c) == best) out.push_back(c);
  return out;
}

NashVerdict is_nash(const Game& game, const JointStrategy& s) {
  validate_strategy(game, s);
  for (NodeId i = 0; i < game.num_nodes(); ++i) {
    Weight cur = payoff_if(game, s, i, s[i]);
    for (Colour c : game.colour_set(i)) {
      if (c == s[i]) continue;
      if (payoff_if(game, s, i, c) > cur) return {false, i, c};
    }
  }
  return {true, -1, kNoColour};
}

std::pair<JointStrategy, bool> apply_deviation(const Game& game,
                                               const JointStrategy& s,
                                               const Deviation& d) {
  validate_strategy(game, s);
  if (d.moves.empty())
    fail(ErrorKind::MalformedDeviation, "empty coalition");
  JointStrategy next = s;
  NodeId prev = -1;
  for (const auto& [node, colour] : d.moves) {
    if (node <= prev)
      fail(ErrorKind::MalformedDeviation, "coalition not sorted or has repeats");
    prev = node;
    if (node >= game.num_nodes())
      fail(ErrorKind::MalformedDeviation, "node id out of range");
    if (!game.has_colour(node, colour))
      fail(ErrorKind::MalformedDeviation,
           "node " + std::to_string(node) + " cannot play that colour");
    if (colour == s[node])
      fail(ErrorKind::MalformedDeviation,
           "node " + std::to_string(node) + " does not change colour");
    next[node] = colour;
  }
  bool profitable = true;
  for (const auto& [node, colour] : d.moves)
    if (payoff(game, next, node) <= payoff(game, s, node)) {
      profitable = false;
      break;
    }
  return {std::move(next), profitable};
}

std::vector<NodeId> max_profitable_unicolour_coalition(const Game& game,
                                                       const JointStrategy& s,
                                                       Colour c) {
  const int n = game.num_nodes();
  std::vector<char> in_set(n, 0);
  std::vector<NodeId> members;
  for (NodeId i = 0; i < n; ++i)
    if (s[i] != c && game.has_colour(i, c)) {
      in_set[i] = 1;
      members.push_back(i);
    }
  bool shrunk = true;
  while (shrunk && !members.empty()) {
    shrunk = false;
    std::vector<NodeId> kept;
    kept.reserve(members.size());
    for (NodeId i : members) {
      Weight gained = game.bonus(i, c);
      for (const Edge& e : game.in_edges(i))
        if (in_set[e.src] || s[e.src] == c) gained += e.weight;
      if (gained > payoff(game, s, i)) {
        kept.push_back(i);
      } else {
        in_set[i] = 0;
        shrunk = true;
      }
    }
    members.swap(kept);
  }
  return members;
}

bool is_strong_equilibrium(const Game& game, const JointStrategy& s) {
  for (Colour c = 0; c < game.num_colours(); ++c)
    if (!max_profitable_unicolour_coalition(game, s, c).empty()) return false;
  return true;
}

namespace {

// Enumerates size-m combinations of `pool` in lexicographic order, calling
// visit(combination) until it returns true. Returns true on early stop.
bool for_each_combination(const std::vector<NodeId>& pool, int m,
                          const std::function<bool(const std::vector<NodeId>&)>& visit) {
  const int n = static_cast<int>(pool.size());
  if (m > n) return false;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::vector<NodeId> combo(m);
  while (true) {
    for (int i = 0; i < m; ++i) combo[i] = pool[idx[i]];
    if (visit(combo)) return true;
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

KEquilibriumVerdict is_k_equilibrium(const Game& game, const JointStrategy& s,
                                     int k, const SearchLimits& limits) {
  validate_strategy(game, s);
  if (k < 1 || k > game.num_nodes())
    fail(ErrorKind::Structural, "k must lie in [1, num_nodes]");
  if (game.num_profiles() > limits.max_profiles)
    fail(ErrorKind::SizeLimit,
         "strategy space exceeds the configured search budget");

  NashVerdict nv = is_nash(game, s);
  if (!nv.nash) {
    Deviation d{{{nv.witness_node, nv.witness_colour}}};
    return {false, d};
  }
  if (k == 1) return {true, std::nullopt};

  // From a Nash state every profitable coalition restricts to a profitable
  // single-colour coalition inside the per-colour fixpoint, so it is enough
  // to enumerate subsets of those fixpoints. Order: size, node list, colour.
  const int num_colours = game.num_colours();
  std::vector<std::vector<char>> in_fix(num_colours);
  std::vector<NodeId> pool;
  {
    std::vector<char> pooled(game.num_nodes(), 0);
    bool any = false;
    for (Colour c = 0; c < num_colours; ++c) {
      auto fix = max_profitable_unicolour_coalition(game, s, c);
      in_fix[c].assign(game.num_nodes(), 0);
      for (NodeId i : fix) {
        in_fix[c][i] = 1;
        pooled[i] = 1;
        any = true;
      }
    }
    if (!any) return {true, std::nullopt};
    for (NodeId i = 0; i < game.num_nodes(); ++i)
      if (pooled[i]) pool.push_back(i);
  }

  std::vector<char> in_combo(game.num_nodes(), 0);
  for (int size = 2; size <= k; ++size) {
    std::optional<Deviation> found;
    auto visit = [&](const std::vector<NodeId>& combo) {
      for (Colour c = 0; c < num_colours; ++c) {
        bool ok = true;
        for (NodeId i : combo)
          if (!in_fix[c][i]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (NodeId i : combo) in_combo[i] = 1;
        // every member needs a predecessor inside the coalition moving to
        // the same colour, otherwise it could already improve unilaterally
        for (NodeId i : combo) {
          bool has_pred = false;
          for (const Edge& e : game.in_edges(i))
            if (in_combo[e.src]) {
              has_pred = true;
              break;
            }
          if (!has_pred) {
            ok = false;
            break;
          }
        }
        if (ok) {
          for (NodeId i : combo) {
            Weight gained = game.bonus(i, c);
            for (const Edge& e : game.in_edges(i))
              if (in_combo[e.src] || s[e.src] == c) gained += e.weight;
            if (gained <= payoff(game, s, i)) {
              ok = false;
              break;
            }
          }
        }
        for (NodeId i : combo) in_combo[i] = 0;
        if (ok) {
          Deviation d;
          for (NodeId i : combo) d.moves.emplace_back(i, c);
          found = std::move(d);
          return true;
        }
      }
      return false;
    };
    if (for_each_combination(pool, size, visit)) return {false, found};
  }
  return {true, std::nullopt};
}

}  // namespace coordgames
