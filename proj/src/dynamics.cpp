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
#include "coordgames/dynamics.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace coordgames {

std::string to_string(TerminalVerdict v) {
  switch (v) {
    case TerminalVerdict::Nash: return "nash";
    case TerminalVerdict::Strong: return "strong";
    case TerminalVerdict::Budget: return "budget";
    case TerminalVerdict::CycleDetected: return "cycle-detected";
  }
  return "budget";
}

int Trace::coalition_steps() const {
  int count = 0;
  for (const auto& step : steps)
    if (step.deviation.moves.size() > 1) ++count;
  return count;
}

TraceBuilder::TraceBuilder(const Game& game, JointStrategy initial,
                           uint64_t step_cap)
    : game_(game), initial_(initial), s_(std::move(initial)), cap_(step_cap) {
  validate_strategy(game_, s_);
}

bool TraceBuilder::apply(NodeId node, Colour to) {
  return apply(Deviation{{{node, to}}});
}

bool TraceBuilder::apply(const Deviation& d) {
  if (over_) return false;
  if (steps_.size() >= cap_) {
    over_ = true;
    return false;
  }
  TraceStep step;
  step.deviation = d;
  for (const auto& [node, colour] : d.moves)
    step.member_payoffs.emplace_back(payoff(game_, s_, node), 0);
  for (const auto& [node, colour] : d.moves) s_[node] = colour;
  for (size_t t = 0; t < d.moves.size(); ++t)
    step.member_payoffs[t].second = payoff(game_, s_, d.moves[t].first);
  steps_.push_back(std::move(step));
  return true;
}

Trace TraceBuilder::finish(TerminalVerdict verdict, TraceMeasures measures) {
  Trace t;
  t.initial = std::move(initial_);
  t.steps = std::move(steps_);
  t.terminal = s_;
  t.verdict = verdict;
  t.measures = std::move(measures);
  return t;
}

namespace {

struct PartitionCtx {
  const PartitionPayload* part = nullptr;
  std::vector<std::vector<NodeId>> cross_in;  // per node: cross sources
  std::vector<char> in_top;
};

PartitionCtx build_partition_ctx(const Game& game,
                                 const PartitionPayload& part) {
  PartitionCtx ctx;
  ctx.part = &part;
  ctx.cross_in.resize(game.num_nodes());
  ctx.in_top.assign(game.num_nodes(), 0);
  for (int i = 0; i < part.top_size; ++i) ctx.in_top[part.cycle_order[i]] = 1;
  for (const Edge& e : part.cross_edges) ctx.cross_in[e.dst].push_back(e.src);
  return ctx;
}

// Tie resolution among the best responses: which colour a non-stable node
// moves to. `br` is sorted ascending and does not contain the current colour
// as a best response (the caller already skipped stable nodes).
Colour choose_colour(const Game& game, const JointStrategy& s, NodeId i,
                     const std::vector<Colour>& br, TieBreakPolicy policy,
                     NodeId pred, const PartitionCtx* pctx) {
  auto in_br = [&](Colour c) {
    return std::binary_search(br.begin(), br.end(), c);
  };
  switch (policy) {
    case TieBreakPolicy::PreferCurrent:
    case TieBreakPolicy::LowestColourId:
      return br[0];
    case TieBreakPolicy::PreferPredecessorColour:
      if (pred >= 0 && in_br(s[pred])) return s[pred];
      return br[0];
    case TieBreakPolicy::PolicyP1:
    case TieBreakPolicy::PolicyP2:
    case TieBreakPolicy::PolicyP3: {
      if (!pctx)
        fail(ErrorKind::Context,
             "tie policy needs a partition-cycle context");
      if (pred < 0 || !in_br(s[pred])) return br[0];
      // score per colour: cross support (P1), bonus (P2), or both (P3)
      auto cs = game.colour_set(i);
      Weight best_score = 0;
      bool first = true;
      auto score_of = [&](Colour c) {
        Weight score = 0;
        if (policy != TieBreakPolicy::PolicyP2)
          for (NodeId src : pctx->cross_in[i])
            if (s[src] == c) ++score;
        if (policy != TieBreakPolicy::PolicyP1) score += game.bonus(i, c);
        return score;
      };
      for (Colour c : cs) {
        Weight sc = score_of(c);
        if (first || sc > best_score) best_score = sc;
        first = false;
      }
      for (Colour c : br)
        if (score_of(c) == best_score) return c;
      return s[pred];
    }
  }
  return br[0];
}

struct ChooserSpec {
  TieBreakPolicy base = TieBreakPolicy::LowestColourId;
  bool partition_auto = false;   // pick P1 or P2/P3 per node
  bool partition_bonus = false;  // bonuses present: P2 on top, P3 on bottom
  const PartitionCtx* pctx = nullptr;
  const std::vector<NodeId>* pred_of = nullptr;  // per node id, -1 if none
};

Colour choose(const Game& game, const JointStrategy& s, NodeId i,
              const std::vector<Colour>& br, const ChooserSpec& spec) {
  TieBreakPolicy policy = spec.base;
  if (spec.partition_auto) {
    if (!spec.partition_bonus)
      policy = TieBreakPolicy::PolicyP1;
    else
      policy = spec.pctx->in_top[i] ? TieBreakPolicy::PolicyP2
                                    : TieBreakPolicy::PolicyP3;
  }
  NodeId pred = spec.pred_of ? (*spec.pred_of)[i] : -1;
  return choose_colour(game, s, i, br, policy, pred, spec.pctx);
}

bool node_stable(const Game& game, const JointStrategy& s, NodeId i) {
  Weight cur = payoff_if(game, s, i, s[i]);
  for (Colour c : game.colour_set(i))
    if (payoff_if(game, s, i, c) > cur) return false;
  return true;
}

// One round over `order` starting at offset `start`; unstable nodes move to
// their tie-broken best response. Returns the number of changes.
int one_pass(const Game& game, TraceBuilder& tb,
             std::span<const NodeId> order, int start,
             const ChooserSpec& spec) {
  int changes = 0;
  const int len = static_cast<int>(order.size());
  for (int t = 0; t < len; ++t) {
    NodeId i = order[(start + t) % len];
    const JointStrategy& s = tb.state();
    if (node_stable(game, s, i)) continue;
    std::vector<Colour> br = best_responses(game, s, i);
    Colour to = choose(game, s, i, br, spec);
    if (!tb.apply(i, to)) return changes;
    ++changes;
  }
  return changes;
}

enum class RunOutcome { Stable, Budget, Revisit };

RunOutcome stabilize(const Game& game, TraceBuilder& tb,
                     std::span<const NodeId> order, int start,
                     const ChooserSpec& spec, bool detect_revisit) {
  std::set<JointStrategy> seen;
  if (detect_revisit) seen.insert(tb.state());
  while (true) {
    int changes = one_pass(game, tb, order, start, spec);
    if (tb.over_budget()) return RunOutcome::Budget;
    if (changes == 0) return RunOutcome::Stable;
    if (detect_revisit && !seen.insert(tb.state()).second)
      return RunOutcome::Revisit;
  }
}

TerminalVerdict verdict_of(RunOutcome rc) {
  switch (rc) {
    case RunOutcome::Stable: return TerminalVerdict::Nash;
    case RunOutcome::Budget: return TerminalVerdict::Budget;
    case RunOutcome::Revisit: return TerminalVerdict::CycleDetected;
  }
  return TerminalVerdict::Budget;
}

std::vector<NodeId> preds_along(const Game& game,
                                const std::vector<NodeId>& cycle) {
  std::vector<NodeId> pred(game.num_nodes(), -1);
  const int len = static_cast<int>(cycle.size());
  for (int t = 0; t < len; ++t)
    pred[cycle[(t + 1) % len]] = cycle[t];
  return pred;
}

bool cycle_stable(const Game& game, const JointStrategy& s,
                  const std::vector<NodeId>& nodes) {
  for (NodeId i : nodes)
    if (!node_stable(game, s, i)) return false;
  return true;
}

struct ChainWeights {
  std::vector<Weight> inner;  // weight of the edge tail(j) -> head(j)
  std::vector<Weight> outer;  // weight of the edge into head(j) from cycle j+1
};

Weight edge_weight(const Game& game, NodeId src, NodeId dst) {
  for (const Edge& e : game.out_edges(src))
    if (e.dst == dst) return e.weight;
  fail(ErrorKind::Structural, "edge missing from the chain payload");
}

ChainWeights shared_edge_weights(const Game& game, const ChainPayload& chain) {
  ChainWeights w;
  const int num_shared = static_cast<int>(chain.shared_pos.size());
  for (int j = 0; j < num_shared; ++j) {
    const auto& cyc = chain.cycles[j];
    const auto& next = chain.cycles[(j + 1) % chain.num_cycles()];
    int pos = chain.shared_pos[j];
    w.inner.push_back(edge_weight(game, cyc.back(), cyc[0]));
    w.outer.push_back(edge_weight(game, next[pos - 1], next[pos]));
  }
  return w;
}

// Runs cyclic rounds inside one constituent cycle of a chain. External
// neighbours act as live bonuses through the full-game payoff, so nothing is
// materialised. Weighted chains use the two-bonus cycle engine rotated to a
// hub; unweighted ones copy the predecessor and certify per run.
RunOutcome stabilize_chain_cycle(const Game& game, TraceBuilder& tb,
                                 const ChainPayload& chain, int j,
                                 bool weighted) {
  const auto& cyc = chain.cycles[j];
  std::vector<NodeId> pred = preds_along(game, cyc);
  ChooserSpec spec;
  spec.pred_of = &pred;
  int start = 0;
  if (weighted) {
    spec.base = TieBreakPolicy::LowestColourId;
    bool head_is_hub = chain.closed || j + 1 < chain.num_cycles();
    if (!head_is_hub && j > 0) {
      NodeId hub = chain.cycles[j - 1][0];
      for (int t = 0; t < static_cast<int>(cyc.size()); ++t)
        if (cyc[t] == hub) start = t;
    }
  } else {
    spec.base = TieBreakPolicy::PreferPredecessorColour;
  }
  return stabilize(game, tb, cyc, start, spec, !weighted);
}

}  // namespace

std::pair<JointStrategy, bool> step_best_response(const Game& game,
                                                  const JointStrategy& s,
                                                  NodeId i,
                                                  TieBreakPolicy policy,
                                                  const TieBreakContext& ctx) {
  validate_strategy(game, s);
  if (node_stable(game, s, i)) return {s, false};
  std::vector<Colour> br = best_responses(game, s, i);

  PartitionCtx pctx;
  const PartitionCtx* pctx_ptr = nullptr;
  NodeId pred = ctx.predecessor;
  if (policy == TieBreakPolicy::PolicyP1 || policy == TieBreakPolicy::PolicyP2 ||
      policy == TieBreakPolicy::PolicyP3) {
    if (!ctx.partition)
      fail(ErrorKind::Context, "tie policy needs a partition-cycle context");
    pctx = build_partition_ctx(game, *ctx.partition);
    pctx_ptr = &pctx;
    if (pred < 0) {
      const auto& order = ctx.partition->cycle_order;
      for (size_t t = 0; t < order.size(); ++t)
        if (order[t] == i)
          pred = order[(t + order.size() - 1) % order.size()];
    }
  }
  Colour to = choose_colour(game, s, i, br, policy, pred, pctx_ptr);
  JointStrategy next = s;
  next[i] = to;
  return {std::move(next), true};
}

Trace improve_dag(const Game& game, const DagPayload& dag,
                  const JointStrategy& s0, const BoundConstants&) {
  validate_strategy(game, s0);
  const uint64_t bound = game.num_nodes();
  TraceBuilder tb(game, s0, bound);
  ChooserSpec spec;  // lowest colour id
  for (NodeId i : dag.topo_order) {
    const JointStrategy& s = tb.state();
    if (node_stable(game, s, i)) continue;
    std::vector<Colour> br = best_responses(game, s, i);
    tb.apply(i, choose(game, s, i, br, spec));
  }
  TraceMeasures m;
  m.regime = "dag";
  m.bound_cap = bound;
  return tb.finish(TerminalVerdict::Nash, std::move(m));
}

Trace improve_simple_cycle(const Game& game, const CyclePayload& cycle,
                           const JointStrategy& s0,
                           const BoundConstants& bounds) {
  validate_strategy(game, s0);
  const int n = static_cast<int>(cycle.order.size());
  std::vector<NodeId> pred = preds_along(game, cycle.order);
  ChooserSpec spec;
  spec.pred_of = &pred;

  TraceMeasures m;
  int start = 0;
  bool revisit = false;
  if (game.unweighted()) {
    m.regime = "cycle-unweighted-bonuses";
    spec.base = TieBreakPolicy::PreferPredecessorColour;
    revisit = true;
  } else if (game.count_effective_bonus_nodes() <= 2) {
    m.regime = "cycle-two-bonuses";
    spec.base = TieBreakPolicy::LowestColourId;
    for (int t = 0; t < n; ++t)
      if (game.has_effective_bonus(cycle.order[t])) {
        start = t;
        break;
      }
  } else if (game.count_nontrivial_weight_edges() <= 2) {
    m.regime = "cycle-bonuses-two-weights";
    spec.base = TieBreakPolicy::LowestColourId;
    NodeId target = -1;
    for (const Edge& e : game.edges())
      if (e.weight != 1 && (target < 0 || e.dst < target)) target = e.dst;
    for (int t = 0; t < n; ++t)
      if (cycle.order[t] == target) start = t;
  } else {
    fail(ErrorKind::NotGuaranteed,
         "cycle with three or more non-unit edges and three or more bonus "
         "nodes; such games can lack a Nash equilibrium");
  }

  m.bound_cap = uint64_t(bounds.k_cycle) * n;
  TraceBuilder tb(game, s0, kSafetyFactor * m.bound_cap);
  RunOutcome rc = stabilize(game, tb, cycle.order, start, spec, revisit);
  return tb.finish(verdict_of(rc), std::move(m));
}

int chain_guard(const Game& game, const ChainPayload& chain,
                const JointStrategy& s) {
  int guard = 0;
  const int limit = chain.num_cycles() - 1;
  for (int j = 0; j < limit; ++j) {
    if (!cycle_stable(game, s, chain.cycles[j])) break;
    NodeId head = chain.cycles[j][0];
    NodeId tail = chain.cycles[j].back();
    if (s[head] == s[tail]) guard = j + 1;
  }
  return guard;
}

int count_stable_cycles(const Game& game, const ChainPayload& chain,
                        const JointStrategy& s) {
  int count = 0;
  for (const auto& cyc : chain.cycles)
    if (cycle_stable(game, s, cyc)) ++count;
  return count;
}

namespace {

void record_phase(const Game& game, const ChainPayload& chain,
                  const TraceBuilder& tb, TraceMeasures& m) {
  m.guard_values.push_back(chain_guard(game, chain, tb.state()));
  m.stable_cycles.push_back(count_stable_cycles(game, chain, tb.state()));
  m.phase_ends.push_back(tb.steps());
}

// Least-unstable-cycle loop shared by the unweighted chain schedulers and
// the equal-weight fallback. `first`/`last` bound the cycle range. A phase
// covers a whole downstream propagation: it ends when the selection moves
// past the cycle that opened it.
RunOutcome chain_least_first_loop(const Game& game, TraceBuilder& tb,
                                  const ChainPayload& chain, int first,
                                  int last, bool weighted, bool ascending,
                                  TraceMeasures* m) {
  int phase_open = -1;
  while (true) {
    int pick = -1;
    if (ascending) {
      for (int j = first; j <= last; ++j)
        if (!cycle_stable(game, tb.state(), chain.cycles[j])) {
          pick = j;
          break;
        }
    } else {
      for (int j = last; j >= first; --j)
        if (!cycle_stable(game, tb.state(), chain.cycles[j])) {
          pick = j;
          break;
        }
    }
    if (pick < 0) break;
    bool past = phase_open >= 0 &&
                (ascending ? pick > phase_open : pick < phase_open);
    if (past && m) record_phase(game, chain, tb, *m);
    if (phase_open < 0 || past) phase_open = pick;
    RunOutcome rc = stabilize_chain_cycle(game, tb, chain, pick, weighted);
    if (rc != RunOutcome::Stable) return rc;
  }
  if (m) record_phase(game, chain, tb, *m);
  return RunOutcome::Stable;
}

}  // namespace

Trace improve_open_chain(const Game& game, const ChainPayload& chain,
                         const JointStrategy& s0,
                         const BoundConstants& bounds) {
  validate_strategy(game, s0);
  if (chain.closed)
    fail(ErrorKind::Structural, "expected an open chain payload");
  const int m_cycles = chain.num_cycles();
  const int n = chain.max_cycle_size();
  const bool weighted = !game.unweighted();
  const bool bonuses = game.count_effective_bonus_nodes() > 0;
  if (weighted && bonuses)
    fail(ErrorKind::NotGuaranteed,
         "chain with both non-unit weights and bonuses; such games can lack "
         "a Nash equilibrium");

  TraceMeasures meas;
  if (!weighted) {
    meas.regime = "open-chain-unweighted";
    meas.bound_cap = uint64_t(bounds.k_open) * n * m_cycles * m_cycles;
    TraceBuilder tb(game, s0, kSafetyFactor * meas.bound_cap);
    RunOutcome rc = chain_least_first_loop(game, tb, chain, 0, m_cycles - 1,
                                           false, true, &meas);
    return tb.finish(verdict_of(rc), std::move(meas));
  }

  ChainWeights w = shared_edge_weights(game, chain);
  bool has_equal = false;
  for (size_t j = 0; j < w.inner.size(); ++j)
    if (w.inner[j] == w.outer[j]) has_equal = true;

  meas.bound_cap =
      uint64_t(bounds.k_wopen) * n * m_cycles * m_cycles * m_cycles;
  TraceBuilder tb(game, s0, kSafetyFactor * meas.bound_cap);

  if (has_equal) {
    // shared nodes with equal in-weights leave the descent direction
    // underdetermined; fall back to the break-point schedule and certify
    meas.regime = "open-chain-weighted-equal";
    meas.experimental = true;
    RunOutcome rc = chain_least_first_loop(game, tb, chain, 0, m_cycles - 1,
                                           true, true, &meas);
    return tb.finish(verdict_of(rc), std::move(meas));
  }

  meas.regime = "open-chain-weighted-blocks";
  // maximal runs of cycles whose shared-node weight comparisons agree
  struct Block {
    int first, last;
    bool ascending;  // inner weight dominates: stabilise front to back
  };
  std::vector<Block> blocks;
  {
    int p = 0;
    while (p < m_cycles) {
      if (p == m_cycles - 1) {
        blocks.push_back({p, p, true});
        break;
      }
      bool asc = w.inner[p] > w.outer[p];
      int q = p + 1;
      while (q <= m_cycles - 2 && (w.inner[q] > w.outer[q]) == asc) ++q;
      blocks.push_back({p, q, asc});
      p = q + 1;
    }
  }

  RunOutcome rc = RunOutcome::Stable;
  while (true) {
    int pick = -1;
    for (int b = 0; b < static_cast<int>(blocks.size()) && pick < 0; ++b)
      for (int j = blocks[b].first; j <= blocks[b].last; ++j)
        if (!cycle_stable(game, tb.state(), chain.cycles[j])) {
          pick = b;
          break;
        }
    if (pick < 0) break;
    const Block& blk = blocks[pick];
    rc = chain_least_first_loop(game, tb, chain, blk.first, blk.last, true,
                                blk.ascending, nullptr);
    record_phase(game, chain, tb, meas);
    if (rc != RunOutcome::Stable) break;
  }
  return tb.finish(verdict_of(rc), std::move(meas));
}

Trace improve_closed_chain(const Game& game, const ChainPayload& chain,
                           const JointStrategy& s0,
                           const BoundConstants& bounds) {
  validate_strategy(game, s0);
  if (!chain.closed)
    fail(ErrorKind::Structural, "expected a closed chain payload");
  if (!game.unweighted())
    fail(ErrorKind::NotGuaranteed,
         "closed chain with non-unit weights; such games can lack a Nash "
         "equilibrium");
  if (game.count_effective_bonus_nodes() > 0)
    fail(ErrorKind::NotGuaranteed,
         "closed chain with bonuses has no guaranteed improvement path");

  const int m_cycles = chain.num_cycles();
  const int n = chain.max_cycle_size();
  TraceMeasures meas;
  meas.regime = "closed-chain-unweighted";
  meas.bound_cap = uint64_t(bounds.k_closed) * n * m_cycles * m_cycles;
  TraceBuilder tb(game, s0, kSafetyFactor * meas.bound_cap);

  // open part first, then the closing cycle, then reverse-order propagation
  RunOutcome rc = chain_least_first_loop(game, tb, chain, 0, m_cycles - 2,
                                         false, true, &meas);
  std::set<JointStrategy> loop_states;
  while (rc == RunOutcome::Stable) {
    rc = stabilize_chain_cycle(game, tb, chain, m_cycles - 1, false);
    record_phase(game, chain, tb, meas);
    if (rc != RunOutcome::Stable) break;
    bool done = true;
    for (int j = m_cycles - 2; j >= 0; --j)
      if (!cycle_stable(game, tb.state(), chain.cycles[j])) {
        done = false;
        rc = stabilize_chain_cycle(game, tb, chain, j, false);
        record_phase(game, chain, tb, meas);
        if (rc != RunOutcome::Stable) break;
      }
    if (rc != RunOutcome::Stable) break;
    if (done && cycle_stable(game, tb.state(), chain.cycles[m_cycles - 1]))
      break;
    if (!loop_states.insert(tb.state()).second) {
      rc = RunOutcome::Revisit;
      break;
    }
  }
  return tb.finish(verdict_of(rc), std::move(meas));
}

namespace {

int trailing_unicolour_bottom(const Game&, const PartitionPayload& part,
                              const JointStrategy& s) {
  const auto& order = part.cycle_order;
  Colour tail = s[order.back()];
  int count = 0;
  for (int i = static_cast<int>(order.size()) - 1; i >= part.top_size; --i) {
    if (s[order[i]] != tail) break;
    ++count;
  }
  return count;
}

Trace run_partition_rounds(const Game& game, const PartitionPayload& part,
                           const JointStrategy& s0, bool bonuses,
                           const BoundConstants& bounds, TraceMeasures meas) {
  const int n = game.num_nodes();
  const int k = part.top_size;
  PartitionCtx ctx = build_partition_ctx(game, part);
  std::vector<NodeId> pred = preds_along(game, part.cycle_order);
  ChooserSpec spec;
  spec.partition_auto = true;
  spec.partition_bonus = bonuses;
  spec.pctx = &ctx;
  spec.pred_of = &pred;

  meas.regime = bonuses ? "partition-cycle-bonuses" : "partition-cycle";
  uint64_t base = uint64_t(n) * std::max(n - k, 1);
  meas.bound_cap = bonuses ? uint64_t(bounds.k_pcb) * k * base
                           : uint64_t(bounds.k_pc) * base;
  TraceBuilder tb(game, s0, kSafetyFactor * meas.bound_cap);
  RunOutcome rc = RunOutcome::Stable;
  while (true) {
    int changes = one_pass(game, tb, part.cycle_order, 0, spec);
    meas.x_sizes.push_back(trailing_unicolour_bottom(game, part, tb.state()));
    if (tb.over_budget()) {
      rc = RunOutcome::Budget;
      break;
    }
    if (changes == 0) break;
  }
  return tb.finish(verdict_of(rc), std::move(meas));
}

}  // namespace

Trace improve_partition_cycle(const Game& game, const PartitionPayload& part,
                              const JointStrategy& s0,
                              const BoundConstants& bounds) {
  validate_strategy(game, s0);
  const bool bonuses = game.count_effective_bonus_nodes() > 0;
  std::vector<char> top(game.num_nodes(), 0);
  for (int i = 0; i < part.top_size; ++i) top[part.cycle_order[i]] = 1;
  for (const Edge& e : part.cycle_edges) {
    if (e.weight == 1) continue;
    if (!(top[e.src] && top[e.dst]))
      fail(ErrorKind::NotGuaranteed,
           "partition-cycle with weighted bottom-path edges; two such edges "
           "already allow games without a Nash equilibrium");
    if (bonuses)
      fail(ErrorKind::NotGuaranteed,
           "partition-cycle with bonuses allows weights on cross edges only");
  }

  bool need_split = false;
  for (const Edge& e : part.cross_edges)
    if (e.weight >= 2) need_split = true;

  if (!need_split)
    return run_partition_rounds(game, part, s0, bonuses, bounds, {});

  SplitResult sp = split_weighted_cross_edges(game, part);
  JointStrategy s0x(sp.game.num_nodes());
  for (NodeId i = 0; i < sp.game.num_nodes(); ++i) s0x[i] = s0[sp.origin_of[i]];

  TraceMeasures meas;
  meas.expanded_nodes = sp.game.num_nodes();
  meas.expanded_top = sp.payload.top_size;
  Trace expanded =
      run_partition_rounds(sp.game, sp.payload, s0x, bonuses, bounds, meas);

  // pull the run back: clone steps are forced copies and disappear
  TraceBuilder tb(game, s0, expanded.num_steps() + 1);
  for (const TraceStep& step : expanded.steps) {
    auto [node, colour] = step.deviation.moves[0];
    if (node < game.num_nodes()) tb.apply(node, colour);
  }
  return tb.finish(expanded.verdict, std::move(expanded.measures));
}

Trace run_fair_random(const Game& game, const JointStrategy& s0, uint64_t seed,
                      uint64_t step_budget) {
  validate_strategy(game, s0);
  TraceBuilder tb(game, s0, step_budget);
  std::mt19937_64 rng(seed);
  TraceMeasures meas;
  meas.regime = "fair-random";
  meas.bound_cap = step_budget;
  while (true) {
    const JointStrategy& s = tb.state();
    std::vector<std::pair<NodeId, Colour>> moves;
    for (NodeId i = 0; i < game.num_nodes(); ++i) {
      Weight cur = payoff_if(game, s, i, s[i]);
      for (Colour c : game.colour_set(i))
        if (payoff_if(game, s, i, c) > cur) moves.emplace_back(i, c);
    }
    if (moves.empty()) return tb.finish(TerminalVerdict::Nash, std::move(meas));
    // modulo keeps the draw reproducible across standard libraries
    const auto& [node, colour] = moves[rng() % moves.size()];
    if (!tb.apply(node, colour))
      return tb.finish(TerminalVerdict::Budget, std::move(meas));
  }
}

Trace solve_by_class(const Game& game, const GraphClass& cls,
                     const JointStrategy& s0, const BoundConstants& bounds) {
  switch (cls.tag) {
    case ClassTag::Dag:
      return improve_dag(game, std::get<DagPayload>(cls.payload), s0, bounds);
    case ClassTag::SimpleCycle:
      return improve_simple_cycle(game, std::get<CyclePayload>(cls.payload),
                                  s0, bounds);
    case ClassTag::OpenChain:
      return improve_open_chain(game, std::get<ChainPayload>(cls.payload), s0,
                                bounds);
    case ClassTag::ClosedChain:
      return improve_closed_chain(game, std::get<ChainPayload>(cls.payload),
                                  s0, bounds);
    case ClassTag::PartitionCycle:
      return improve_partition_cycle(
          game, std::get<PartitionPayload>(cls.payload), s0, bounds);
    case ClassTag::Other:
      break;
  }
  fail(ErrorKind::NotGuaranteed,
       "no scheduler covers this graph class; use the state-graph oracle");
}

}  // namespace coordgames
