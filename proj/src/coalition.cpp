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
#include "coordgames/coalition.hpp"

#include <algorithm>
#include <set>

namespace coordgames {

std::optional<Deviation> find_profitable_coalition_from_nash(
    const Game& game, const JointStrategy& s) {
  if (!is_nash(game, s).nash)
    fail(ErrorKind::Structural,
         "coalition search requires a Nash equilibrium state");
  for (Colour c = 0; c < game.num_colours(); ++c) {
    auto members = max_profitable_unicolour_coalition(game, s, c);
    if (members.empty()) continue;
    Deviation d;
    for (NodeId i : members) d.moves.emplace_back(i, c);
    return d;
  }
  return std::nullopt;
}

CoalitionCandidate unicolour_cycle_witness(const Game& game,
                                           const JointStrategy& before,
                                           const Deviation& d) {
  const Colour c = d.moves.front().second;
  std::vector<char> member(game.num_nodes(), 0);
  for (const auto& [node, colour] : d.moves)
    if (colour == c) {
      if (before[node] == c)
        fail(ErrorKind::Structural, "coalition member keeps its colour");
      member[node] = 1;
    }

  // walk same-colour predecessors inside the coalition until one repeats
  std::vector<NodeId> walk{d.moves.front().first};
  std::vector<int> pos_in_walk(game.num_nodes(), -1);
  pos_in_walk[walk[0]] = 0;
  while (true) {
    NodeId cur = walk.back();
    NodeId pred = -1;
    for (const Edge& e : game.in_edges(cur))
      if (member[e.src] && (pred < 0 || e.src < pred)) pred = e.src;
    if (pred < 0)
      fail(ErrorKind::Structural,
           "coalition member without an in-coalition predecessor");
    if (pos_in_walk[pred] >= 0) {
      CoalitionCandidate out;
      out.target_colour = c;
      out.cycle_nodes.assign(walk.begin() + pos_in_walk[pred], walk.end());
      std::reverse(out.cycle_nodes.begin(), out.cycle_nodes.end());
      return out;
    }
    pos_in_walk[pred] = static_cast<int>(walk.size());
    walk.push_back(pred);
  }
}

namespace {

// Replays every step of `piece` onto the builder.
bool splice(TraceBuilder& tb, const Trace& piece) {
  for (const TraceStep& step : piece.steps)
    if (!tb.apply(step.deviation)) return false;
  return true;
}

}  // namespace

Trace c_improve_simple_cycle(const Game& game, const CyclePayload& cycle,
                             const JointStrategy& s0,
                             const BoundConstants& bounds) {
  Trace base = improve_simple_cycle(game, cycle, s0, bounds);
  if (base.verdict != TerminalVerdict::Nash) return base;

  // Escalation chain of whole-cycle recolourings; only its endpoint is
  // played, as one deviation. Every hop strictly raises each member's
  // payoff, so the shortcut stays profitable for everyone who moves.
  JointStrategy cur = base.terminal;
  bool moved = false;
  while (true) {
    auto d = find_profitable_coalition_from_nash(game, cur);
    if (!d) break;
    cur = apply_deviation(game, cur, *d).first;
    moved = true;
  }

  TraceMeasures meas = base.measures;
  meas.regime += "+coalition";
  meas.bound_cap += 1;
  TraceBuilder tb(game, s0, base.num_steps() + 1);
  splice(tb, base);
  if (moved) {
    Deviation jump;
    for (NodeId i = 0; i < game.num_nodes(); ++i)
      if (base.terminal[i] != cur[i]) jump.moves.emplace_back(i, cur[i]);
    tb.apply(jump);
  }
  return tb.finish(TerminalVerdict::Strong, std::move(meas));
}

Trace c_improve_closed_chain(const Game& game, const ChainPayload& chain,
                             const JointStrategy& s0,
                             const BoundConstants& bounds) {
  const int m_cycles = chain.num_cycles();
  const int n = chain.max_cycle_size();
  TraceMeasures meas;
  meas.regime = "closed-chain-c-improvement";
  meas.bound_cap =
      uint64_t(bounds.k_cc) * n * m_cycles * m_cycles * m_cycles;
  TraceBuilder tb(game, s0, kSafetyFactor * meas.bound_cap);

  Trace base = improve_closed_chain(game, chain, s0, bounds);
  if (base.verdict != TerminalVerdict::Nash) return base;
  splice(tb, base);

  // one settled cycle per deviation bounds the coalition steps by m
  int coalition_steps = 0;
  while (true) {
    auto d = find_profitable_coalition_from_nash(game, tb.state());
    if (!d) return tb.finish(TerminalVerdict::Strong, std::move(meas));
    if (coalition_steps > m_cycles)
      return tb.finish(TerminalVerdict::Budget, std::move(meas));
    ++coalition_steps;
    if (!tb.apply(*d)) return tb.finish(TerminalVerdict::Budget, std::move(meas));
    Trace settle = improve_closed_chain(game, chain, tb.state(), bounds);
    if (!splice(tb, settle))
      return tb.finish(TerminalVerdict::Budget, std::move(meas));
    if (settle.verdict != TerminalVerdict::Nash)
      return tb.finish(settle.verdict, std::move(meas));
  }
}

Trace c_improve_open_chain(const Game& game, const ChainPayload& chain,
                           const JointStrategy& s0,
                           const BoundConstants& bounds) {
  if (chain.closed)
    fail(ErrorKind::Structural, "expected an open chain payload");
  Trace base = improve_open_chain(game, chain, s0, bounds);
  if (base.verdict != TerminalVerdict::Nash) return base;
  if (!find_profitable_coalition_from_nash(game, base.terminal)) {
    Trace done = std::move(base);
    done.verdict = TerminalVerdict::Strong;
    done.measures.regime += "+coalition";
    return done;
  }

  const int m_cycles = chain.num_cycles();
  const int n_old = game.num_nodes();

  // bridge hosts: an interior node of the first and of the last cycle
  NodeId h_first = chain.cycles[0][1];
  NodeId h_last = -1;
  {
    const auto& last = chain.cycles[m_cycles - 1];
    int hub_pos = chain.shared_pos.empty()
                      ? -1
                      : chain.shared_pos[m_cycles - 2];
    for (int t = 1; t + 1 < static_cast<int>(last.size()); ++t)
      if (t != hub_pos) {
        h_last = last[t];
        break;
      }
    if (h_last < 0)
      fail(ErrorKind::Embedding,
           "last cycle has no interior node free to host the bridge");
  }

  // fresh colour and the four-node bridge cycle closing the chain
  std::vector<std::string> names = game.colour_names();
  std::string fresh = "_bridge";
  while (game.find_colour(fresh)) fresh += "_";
  names.push_back(fresh);
  const Colour c_star = static_cast<Colour>(names.size()) - 1;
  const NodeId z1 = n_old, z2 = n_old + 1;

  std::vector<Edge> edges = game.edges();
  edges.push_back({h_first, z1, 1});
  edges.push_back({z1, h_last, 1});
  edges.push_back({h_last, z2, 1});
  edges.push_back({z2, h_first, 1});

  std::vector<std::vector<Colour>> sets(n_old + 2);
  for (NodeId i = 0; i < n_old; ++i) {
    auto cs = game.colour_set(i);
    sets[i].assign(cs.begin(), cs.end());
  }
  sets[z1] = {c_star};
  sets[z2] = {c_star};
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;
  for (NodeId i = 0; i < n_old; ++i)
    for (const auto& [c, w] : game.bonuses_of(i)) bonuses.push_back({{i, c}, w});
  Game closed_game = Game::create(n_old + 2, std::move(names),
                                  std::move(edges), std::move(sets), bonuses);

  // chain payload of the closed graph: last cycle re-anchored at its bridge
  // host, bridge appended
  ChainPayload closed_chain;
  closed_chain.closed = true;
  for (int j = 0; j + 1 < m_cycles; ++j)
    closed_chain.cycles.push_back(chain.cycles[j]);
  {
    const auto& last = chain.cycles[m_cycles - 1];
    std::vector<NodeId> rotated;
    int at = 0;
    while (last[at] != h_last) ++at;
    for (size_t t = 0; t < last.size(); ++t)
      rotated.push_back(last[(at + t) % last.size()]);
    closed_chain.cycles.push_back(std::move(rotated));
  }
  closed_chain.cycles.push_back({h_first, z1, h_last, z2});
  for (int j = 0; j < m_cycles + 1; ++j) {
    const auto& next = closed_chain.cycles[(j + 1) % (m_cycles + 1)];
    NodeId head = closed_chain.cycles[j][0];
    int pos = -1;
    for (int t = 0; t < static_cast<int>(next.size()); ++t)
      if (next[t] == head) pos = t;
    closed_chain.shared_pos.push_back(pos);
  }
  if (auto why = verify_chain_payload(closed_game, closed_chain))
    fail(ErrorKind::Embedding, "bridge construction broke the chain: " + *why);

  JointStrategy sx = base.terminal;
  sx.push_back(c_star);
  sx.push_back(c_star);
  Trace closed_run =
      c_improve_closed_chain(closed_game, closed_chain, sx, bounds);

  TraceMeasures meas = closed_run.measures;
  meas.regime = "open-chain-c-improvement";
  TraceBuilder tb(game, s0,
                  base.num_steps() + closed_run.num_steps() + 1);
  splice(tb, base);
  for (const TraceStep& step : closed_run.steps) {
    // bridge nodes have a single colour and never move
    Deviation mapped;
    for (const auto& [node, colour] : step.deviation.moves)
      if (node < n_old) mapped.moves.emplace_back(node, colour);
    if (!mapped.moves.empty()) tb.apply(mapped);
  }
  return tb.finish(closed_run.verdict, std::move(meas));
}

}  // namespace coordgames
