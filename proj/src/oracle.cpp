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
#include "coordgames/oracle.hpp"

#include <algorithm>
#include <deque>

namespace coordgames {

StateSpace::StateSpace(const Game& game, uint64_t budget) : game_(&game) {
  stride_.resize(game.num_nodes());
  for (NodeId i = 0; i < game.num_nodes(); ++i) {
    stride_[i] = size_;
    uint64_t radix = game.colour_set(i).size();
    if (size_ > budget / radix)
      fail(ErrorKind::SizeLimit,
           "strategy space exceeds the configured budget of " +
               std::to_string(budget) + " profiles");
    size_ *= radix;
  }
}

uint64_t StateSpace::index_of(const JointStrategy& s) const {
  uint64_t idx = 0;
  for (NodeId i = 0; i < game_->num_nodes(); ++i) {
    auto cs = game_->colour_set(i);
    uint64_t digit =
        std::lower_bound(cs.begin(), cs.end(), s[i]) - cs.begin();
    idx += digit * stride_[i];
  }
  return idx;
}

JointStrategy StateSpace::state_at(uint64_t index) const {
  JointStrategy s(game_->num_nodes());
  for (NodeId i = 0; i < game_->num_nodes(); ++i) {
    auto cs = game_->colour_set(i);
    s[i] = cs[(index / stride_[i]) % cs.size()];
  }
  return s;
}

void StateSpace::advance(JointStrategy& s, uint64_t& index) const {
  ++index;
  for (NodeId i = 0; i < game_->num_nodes(); ++i) {
    auto cs = game_->colour_set(i);
    auto digit = std::lower_bound(cs.begin(), cs.end(), s[i]) - cs.begin();
    if (digit + 1 < static_cast<long>(cs.size())) {
      s[i] = cs[digit + 1];
      return;
    }
    s[i] = cs[0];
  }
}

uint32_t StateGraphReport::max_finite_path() const {
  uint32_t best = 0;
  for (uint32_t d : shortest_path_len)
    if (d != kUnreachable) best = std::max(best, d);
  return best;
}

uint64_t StateGraphReport::unreachable_states() const {
  uint64_t count = 0;
  for (uint32_t d : shortest_path_len)
    if (d == kUnreachable) ++count;
  return count;
}

std::vector<JointStrategy> enumerate_nash(const Game& game, uint64_t budget) {
  StateSpace space(game, budget);
  std::vector<JointStrategy> out;
  JointStrategy s = space.state_at(0);
  uint64_t idx = 0;
  for (uint64_t t = 0; t < space.size(); ++t) {
    if (is_nash(game, s).nash) out.push_back(s);
    space.advance(s, idx);
  }
  return out;
}

std::vector<JointStrategy> enumerate_strong(const Game& game,
                                            uint64_t budget) {
  std::vector<JointStrategy> out;
  for (JointStrategy& s : enumerate_nash(game, budget))
    if (is_strong_equilibrium(game, s)) out.push_back(std::move(s));
  return out;
}

bool unpruned_profitable_coalition_exists(const Game& game,
                                          const JointStrategy& s,
                                          uint64_t budget) {
  StateSpace space(game, budget);
  const uint64_t self = space.index_of(s);
  std::vector<Weight> base(game.num_nodes());
  for (NodeId i = 0; i < game.num_nodes(); ++i) base[i] = payoff(game, s, i);
  JointStrategy t = space.state_at(0);
  uint64_t idx = 0;
  for (uint64_t step = 0; step < space.size(); ++step) {
    if (idx != self) {
      bool profitable = true, any = false;
      for (NodeId i = 0; i < game.num_nodes() && profitable; ++i) {
        if (t[i] == s[i]) continue;
        any = true;
        if (payoff(game, t, i) <= base[i]) profitable = false;
      }
      if (any && profitable) return true;
    }
    space.advance(t, idx);
  }
  return false;
}

std::vector<JointStrategy> enumerate_strong_unpruned(const Game& game,
                                                     uint64_t budget) {
  std::vector<JointStrategy> out;
  for (JointStrategy& s : enumerate_nash(game, budget))
    if (!unpruned_profitable_coalition_exists(game, s, budget))
      out.push_back(std::move(s));
  return out;
}

namespace {

struct SingletonMoves {
  const Game& game;
  std::vector<uint64_t> stride;

  explicit SingletonMoves(const Game& g) : game(g) {
    stride.resize(g.num_nodes());
    uint64_t acc = 1;
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
      stride[i] = acc;
      acc *= g.colour_set(i).size();
    }
  }

  template <typename Fn>
  void successors(const JointStrategy& s, uint64_t idx, Fn&& fn) const {
    for (NodeId i = 0; i < game.num_nodes(); ++i) {
      auto cs = game.colour_set(i);
      Weight cur = payoff_if(game, s, i, s[i]);
      auto digit = std::lower_bound(cs.begin(), cs.end(), s[i]) - cs.begin();
      uint64_t base = idx - uint64_t(digit) * stride[i];
      for (size_t d = 0; d < cs.size(); ++d) {
        if (static_cast<long>(d) == digit) continue;
        if (payoff_if(game, s, i, cs[d]) > cur)
          fn(base + uint64_t(d) * stride[i], i, cs[d]);
      }
    }
  }

  // predecessors of t: states that reach t by one profitable move
  template <typename Fn>
  void predecessors(const JointStrategy& t, uint64_t idx, Fn&& fn) const {
    for (NodeId i = 0; i < game.num_nodes(); ++i) {
      auto cs = game.colour_set(i);
      Weight after = payoff_if(game, t, i, t[i]);
      auto digit = std::lower_bound(cs.begin(), cs.end(), t[i]) - cs.begin();
      uint64_t base = idx - uint64_t(digit) * stride[i];
      for (size_t d = 0; d < cs.size(); ++d) {
        if (static_cast<long>(d) == digit) continue;
        if (after > payoff_if(game, t, i, cs[d]))
          fn(base + uint64_t(d) * stride[i]);
      }
    }
  }
};

}  // namespace

StateGraphReport build_state_graph(const Game& game, CoalitionMode mode,
                                   const OracleBudgets& budgets) {
  const uint64_t budget =
      mode == CoalitionMode::Singleton ? budgets.singleton : budgets.full;
  StateSpace space(game, budget);
  const uint64_t n_states = space.size();
  const int n = game.num_nodes();

  StateGraphReport report;
  report.num_states = n_states;
  report.shortest_path_len.assign(n_states, StateGraphReport::kUnreachable);

  std::vector<char> nash(n_states, 0);
  {
    JointStrategy s = space.state_at(0);
    uint64_t idx = 0;
    for (uint64_t t = 0; t < n_states; ++t) {
      if (is_nash(game, s).nash) {
        nash[idx] = 1;
        report.nash_states.push_back(idx);
        if (is_strong_equilibrium(game, s))
          report.strong_states.push_back(idx);
      }
      space.advance(s, idx);
    }
  }

  SingletonMoves moves(game);

  // reverse breadth-first search from the Nash sinks
  {
    std::deque<uint64_t> queue;
    for (uint64_t idx : report.nash_states) {
      report.shortest_path_len[idx] = 0;
      queue.push_back(idx);
    }
    while (!queue.empty()) {
      uint64_t idx = queue.front();
      queue.pop_front();
      JointStrategy t = space.state_at(idx);
      uint32_t next = report.shortest_path_len[idx] + 1;
      moves.predecessors(t, idx, [&](uint64_t pred) {
        if (report.shortest_path_len[pred] != StateGraphReport::kUnreachable)
          return;
        report.shortest_path_len[pred] = next;
        queue.push_back(pred);
      });
    }
    report.weakly_acyclic = true;
    for (uint32_t d : report.shortest_path_len)
      if (d == StateGraphReport::kUnreachable) report.weakly_acyclic = false;
  }

  // acyclicity of the unilateral improvement relation, iterative DFS
  {
    report.has_fip = true;
    std::vector<char> colour(n_states, 0);  // 0 new, 1 on stack, 2 done
    struct Frame {
      uint64_t idx;
      int node;
      int cpos;
    };
    std::vector<Frame> stack;
    for (uint64_t root = 0; root < n_states && report.has_fip; ++root) {
      if (colour[root] != 0) continue;
      colour[root] = 1;
      stack.push_back({root, 0, 0});
      while (!stack.empty() && report.has_fip) {
        Frame& f = stack.back();
        JointStrategy s = space.state_at(f.idx);
        uint64_t next_idx = 0;
        bool found = false;
        while (f.node < n && !found) {
          auto cs = game.colour_set(f.node);
          if (f.cpos >= static_cast<int>(cs.size())) {
            ++f.node;
            f.cpos = 0;
            continue;
          }
          Colour c = cs[f.cpos++];
          if (c == s[f.node]) continue;
          if (payoff_if(game, s, f.node, c) >
              payoff_if(game, s, f.node, s[f.node])) {
            auto digit =
                std::lower_bound(cs.begin(), cs.end(), s[f.node]) - cs.begin();
            auto ndigit = std::lower_bound(cs.begin(), cs.end(), c) - cs.begin();
            next_idx = f.idx + (uint64_t(ndigit) - uint64_t(digit)) *
                                   moves.stride[f.node];
            found = true;
          }
        }
        if (!found) {
          colour[f.idx] = 2;
          stack.pop_back();
          continue;
        }
        if (colour[next_idx] == 1) {
          report.has_fip = false;
        } else if (colour[next_idx] == 0) {
          colour[next_idx] = 1;
          stack.push_back({next_idx, 0, 0});
        }
      }
      stack.clear();
    }
  }

  if (mode == CoalitionMode::Full) {
    // payoff and colour tables make the all-pairs scans affordable
    std::vector<Weight> pay(n_states * n);
    std::vector<Colour> col(n_states * n);
    {
      JointStrategy s = space.state_at(0);
      uint64_t idx = 0;
      for (uint64_t t = 0; t < n_states; ++t) {
        for (NodeId i = 0; i < n; ++i) {
          pay[idx * n + i] = payoff(game, s, i);
          col[idx * n + i] = s[i];
        }
        space.advance(s, idx);
      }
    }
    auto coalition_edge = [&](uint64_t from, uint64_t to) {
      if (from == to) return false;
      bool any = false;
      for (NodeId i = 0; i < n; ++i) {
        if (col[from * n + i] == col[to * n + i]) continue;
        any = true;
        if (pay[to * n + i] <= pay[from * n + i]) return false;
      }
      return any;
    };
    std::vector<char> reached(n_states, 0);
    std::deque<uint64_t> queue;
    for (uint64_t idx : report.strong_states) {
      reached[idx] = 1;
      queue.push_back(idx);
    }
    while (!queue.empty()) {
      uint64_t to = queue.front();
      queue.pop_front();
      for (uint64_t from = 0; from < n_states; ++from)
        if (!reached[from] && coalition_edge(from, to)) {
          reached[from] = 1;
          queue.push_back(from);
        }
    }
    bool all = true;
    for (uint64_t idx = 0; idx < n_states; ++idx)
      if (!reached[idx]) all = false;
    report.c_weakly_acyclic = all;
  }
  return report;
}

std::vector<uint64_t> forward_reachable(const Game& game,
                                        const JointStrategy& from,
                                        CoalitionMode mode,
                                        const OracleBudgets& budgets) {
  const uint64_t budget =
      mode == CoalitionMode::Singleton ? budgets.singleton : budgets.full;
  StateSpace space(game, budget);
  const uint64_t n_states = space.size();
  const int n = game.num_nodes();
  SingletonMoves moves(game);

  std::vector<char> seen(n_states, 0);
  std::deque<uint64_t> queue;
  uint64_t start = space.index_of(from);
  seen[start] = 1;
  queue.push_back(start);

  std::vector<Weight> pay;
  std::vector<Colour> col;
  if (mode == CoalitionMode::Full) {
    pay.resize(n_states * n);
    col.resize(n_states * n);
    JointStrategy s = space.state_at(0);
    uint64_t idx = 0;
    for (uint64_t t = 0; t < n_states; ++t) {
      for (NodeId i = 0; i < n; ++i) {
        pay[idx * n + i] = payoff(game, s, i);
        col[idx * n + i] = s[i];
      }
      space.advance(s, idx);
    }
  }

  while (!queue.empty()) {
    uint64_t idx = queue.front();
    queue.pop_front();
    if (mode == CoalitionMode::Singleton) {
      JointStrategy s = space.state_at(idx);
      moves.successors(s, idx, [&](uint64_t to, NodeId, Colour) {
        if (!seen[to]) {
          seen[to] = 1;
          queue.push_back(to);
        }
      });
    } else {
      for (uint64_t to = 0; to < n_states; ++to) {
        if (seen[to] || to == idx) continue;
        bool any = false, ok = true;
        for (NodeId i = 0; i < n && ok; ++i) {
          if (col[idx * n + i] == col[to * n + i]) continue;
          any = true;
          if (pay[to * n + i] <= pay[idx * n + i]) ok = false;
        }
        if (any && ok) {
          seen[to] = 1;
          queue.push_back(to);
        }
      }
    }
  }
  std::vector<uint64_t> out;
  for (uint64_t idx = 0; idx < n_states; ++idx)
    if (seen[idx]) out.push_back(idx);
  return out;
}

bool nash_reachable_from(const Game& game, const JointStrategy& from,
                         CoalitionMode mode, const OracleBudgets& budgets) {
  const uint64_t budget =
      mode == CoalitionMode::Singleton ? budgets.singleton : budgets.full;
  StateSpace space(game, budget);
  for (uint64_t idx : forward_reachable(game, from, mode, budgets))
    if (is_nash(game, space.state_at(idx)).nash) return true;
  return false;
}

TraceCheck verify_trace(const Game& game, const Trace& trace) {
  try {
    validate_strategy(game, trace.initial);
  } catch (const GameError& e) {
    return {false, -1, std::string("initial state invalid: ") + e.what()};
  }
  JointStrategy s = trace.initial;
  for (int t = 0; t < static_cast<int>(trace.steps.size()); ++t) {
    const TraceStep& step = trace.steps[t];
    JointStrategy next;
    bool profitable;
    try {
      std::tie(next, profitable) = apply_deviation(game, s, step.deviation);
    } catch (const GameError& e) {
      return {false, t, std::string("malformed step: ") + e.what()};
    }
    if (!profitable)
      return {false, t, "step is not strictly profitable for every member"};
    if (step.member_payoffs.size() == step.deviation.moves.size()) {
      for (size_t j = 0; j < step.deviation.moves.size(); ++j) {
        NodeId node = step.deviation.moves[j].first;
        if (step.member_payoffs[j].first != payoff(game, s, node) ||
            step.member_payoffs[j].second != payoff(game, next, node))
          return {false, t, "recorded payoffs do not match the replay"};
      }
    }
    s = std::move(next);
  }
  if (s != trace.terminal)
    return {false, -1, "terminal state does not match the replayed state"};
  if (trace.verdict == TerminalVerdict::Nash && !is_nash(game, s).nash)
    return {false, -1, "terminal verdict says Nash but the state is not"};
  if (trace.verdict == TerminalVerdict::Strong) {
    if (!is_nash(game, s).nash)
      return {false, -1, "terminal verdict says strong but the state is not Nash"};
    if (!is_strong_equilibrium(game, s))
      return {false, -1,
              "terminal verdict says strong but a coalition can deviate"};
  }
  return {};
}

}  // namespace coordgames
