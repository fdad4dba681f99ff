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
#include "coordgames/graph_classes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace coordgames {

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Dag: return "dag";
    case ClassTag::SimpleCycle: return "simple-cycle";
    case ClassTag::OpenChain: return "open-chain";
    case ClassTag::ClosedChain: return "closed-chain";
    case ClassTag::PartitionCycle: return "partition-cycle";
    case ClassTag::Other: return "other";
  }
  return "other";
}

int ChainPayload::max_cycle_size() const {
  int best = 0;
  for (const auto& cyc : cycles) best = std::max(best, (int)cyc.size());
  return best;
}

bool PartitionPayload::in_top(NodeId node) const {
  for (int i = 0; i < top_size; ++i)
    if (cycle_order[i] == node) return true;
  return false;
}

namespace {

inline void tick(DetectorStats* stats) {
  if (stats) ++stats->ops;
}

template <typename T>
Detected<T> detect_fail(std::string why) {
  Detected<T> d;
  d.failure = std::move(why);
  return d;
}

}  // namespace

Detected<DagPayload> detect_dag(const Game& game) {
  const int n = game.num_nodes();
  std::vector<int> indeg(n, 0);
  for (const Edge& e : game.edges()) ++indeg[e.dst];
  std::deque<NodeId> queue;
  for (NodeId i = 0; i < n; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  DagPayload out;
  while (!queue.empty()) {
    NodeId i = queue.front();
    queue.pop_front();
    out.topo_order.push_back(i);
    for (const Edge& e : game.out_edges(i))
      if (--indeg[e.dst] == 0) queue.push_back(e.dst);
  }
  if (static_cast<int>(out.topo_order.size()) != n)
    return detect_fail<DagPayload>("graph contains a directed cycle");
  return {std::move(out), {}};
}

Detected<CyclePayload> detect_simple_cycle(const Game& game) {
  const int n = game.num_nodes();
  if (n < 2) return detect_fail<CyclePayload>("fewer than two nodes");
  for (NodeId i = 0; i < n; ++i)
    if (game.out_degree(i) != 1 || game.in_degree(i) != 1)
      return detect_fail<CyclePayload>("node with degree other than one");
  CyclePayload out;
  NodeId cur = 0;
  for (int step = 0; step < n; ++step) {
    out.order.push_back(cur);
    cur = game.out_edges(cur)[0].dst;
  }
  if (cur != 0)
    return detect_fail<CyclePayload>("edges do not form a single cycle");
  return {std::move(out), {}};
}

namespace {

struct Arc {
  NodeId from = -1;
  NodeId to = -1;
  std::vector<NodeId> interior;
};

NodeId min_node_of_loop(NodeId anchor, const Arc& arc) {
  NodeId best = anchor;
  for (NodeId v : arc.interior) best = std::min(best, v);
  return best;
}

// Cycle node order for a two-anchor cycle, starting at `head`.
std::vector<NodeId> order_pair_cycle(NodeId head, NodeId other,
                                     const Arc& head_to_other,
                                     const Arc& other_to_head) {
  std::vector<NodeId> order;
  order.push_back(head);
  order.insert(order.end(), head_to_other.interior.begin(),
               head_to_other.interior.end());
  order.push_back(other);
  order.insert(order.end(), other_to_head.interior.begin(),
               other_to_head.interior.end());
  return order;
}

std::vector<NodeId> order_loop_from_anchor(NodeId anchor, const Arc& arc) {
  std::vector<NodeId> order;
  order.push_back(anchor);
  order.insert(order.end(), arc.interior.begin(), arc.interior.end());
  return order;
}

std::vector<NodeId> order_loop_from_successor(NodeId anchor, const Arc& arc) {
  std::vector<NodeId> order(arc.interior.begin(), arc.interior.end());
  order.push_back(anchor);
  return order;
}

int index_of(const std::vector<NodeId>& v, NodeId x) {
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] == x) return i;
  return -1;
}

}  // namespace

Detected<ChainPayload> detect_chain(const Game& game, DetectorStats* stats) {
  using R = Detected<ChainPayload>;
  const int n = game.num_nodes();
  std::vector<char> is_shared(n, 0);
  std::vector<NodeId> shared;
  for (NodeId i = 0; i < n; ++i) {
    tick(stats);
    int od = game.out_degree(i), id = game.in_degree(i);
    if (od < 1 || od > 2 || id < 1 || id > 2)
      return detect_fail<ChainPayload>("node degree outside {1,2}");
    if ((od == 2) != (id == 2))
      return detect_fail<ChainPayload>(
          "outdegree-2 nodes differ from indegree-2 nodes");
    if (od == 2) {
      is_shared[i] = 1;
      shared.push_back(i);
    }
  }
  if (shared.empty())
    return detect_fail<ChainPayload>("no outdegree-2 node (not a chain)");

  // Peel maximal runs of degree-1 nodes off each shared node's out-edges.
  std::vector<Arc> arcs;
  std::vector<char> seen(n, 0);
  std::vector<int> in_arcs(n, 0);
  int covered = 0;
  for (NodeId a : shared) {
    for (const Edge& start : game.out_edges(a)) {
      Arc arc;
      arc.from = a;
      NodeId cur = start.dst;
      while (!is_shared[cur]) {
        tick(stats);
        if (seen[cur])
          return detect_fail<ChainPayload>("arcs between hubs overlap");
        seen[cur] = 1;
        ++covered;
        arc.interior.push_back(cur);
        cur = game.out_edges(cur)[0].dst;
      }
      arc.to = cur;
      ++in_arcs[cur];
      arcs.push_back(std::move(arc));
      tick(stats);
    }
  }
  if (covered != n - static_cast<int>(shared.size()))
    return detect_fail<ChainPayload>("nodes not reachable from any hub");
  for (NodeId a : shared)
    if (in_arcs[a] != 2)
      return detect_fail<ChainPayload>("hub with in-arc count other than 2");

  // Group arcs into cycles: a self arc is a cycle touching one hub, a pair
  // of antiparallel arcs is a cycle touching two hubs.
  std::vector<std::vector<int>> self_arcs(n);
  std::map<std::pair<NodeId, NodeId>, std::vector<int>> pair_arcs;
  for (int idx = 0; idx < static_cast<int>(arcs.size()); ++idx) {
    tick(stats);
    const Arc& arc = arcs[idx];
    if (arc.from == arc.to) {
      self_arcs[arc.from].push_back(idx);
    } else {
      pair_arcs[{std::min(arc.from, arc.to), std::max(arc.from, arc.to)}]
          .push_back(idx);
    }
  }
  int num_self = 0;
  for (NodeId a : shared) num_self += static_cast<int>(self_arcs[a].size());

  struct CycleRec {
    NodeId a = -1, b = -1;      // hubs; a == b for an end cycle
    int arc_ab = -1, arc_ba = -1;  // a->b and b->a (same arc when a == b)
  };
  std::vector<CycleRec> recs;
  std::vector<std::vector<int>> adj(n);  // hub -> rec indices of pair cycles
  for (auto& [key, list] : pair_arcs) {
    tick(stats);
    if (list.size() != 2)
      return detect_fail<ChainPayload>("two cycles share two hubs");
    const Arc& a0 = arcs[list[0]];
    const Arc& a1 = arcs[list[1]];
    if (a0.from == a1.from)
      return detect_fail<ChainPayload>("parallel arcs between the same hubs");
    CycleRec rec;
    rec.a = key.first;
    rec.b = key.second;
    rec.arc_ab = (a0.from == key.first) ? list[0] : list[1];
    rec.arc_ba = (a0.from == key.first) ? list[1] : list[0];
    adj[rec.a].push_back(static_cast<int>(recs.size()));
    adj[rec.b].push_back(static_cast<int>(recs.size()));
    recs.push_back(rec);
  }

  ChainPayload chain;
  // rebuilt below as (hub, rec or self-arc) sequences
  std::vector<std::pair<NodeId, int>> loop_cycles;  // (hub, arc idx)
  for (NodeId a : shared)
    for (int idx : self_arcs[a]) loop_cycles.emplace_back(a, idx);

  if (loop_cycles.size() == 2 && recs.empty() && shared.size() == 1) {
    // smallest chain: two cycles hanging off one hub
    NodeId a = shared[0];
    int first = loop_cycles[0].second, second = loop_cycles[1].second;
    if (min_node_of_loop(a, arcs[second]) < min_node_of_loop(a, arcs[first]))
      std::swap(first, second);
    chain.closed = false;
    chain.cycles.push_back(order_loop_from_anchor(a, arcs[first]));
    chain.cycles.push_back(order_loop_from_successor(a, arcs[second]));
    chain.shared_pos.push_back(index_of(chain.cycles[1], a));
  } else if (loop_cycles.size() == 2) {
    // open chain: the two loop cycles are the ends, pair cycles form a path
    NodeId e1 = loop_cycles[0].first, e2 = loop_cycles[1].first;
    if (e1 == e2)
      return detect_fail<ChainPayload>("both end cycles at the same hub");
    for (NodeId a : shared) {
      tick(stats);
      int want = 2 - static_cast<int>(self_arcs[a].size());
      if (static_cast<int>(adj[a].size()) != want)
        return detect_fail<ChainPayload>("hubs do not form a path");
    }
    int la = loop_cycles[0].second, lb = loop_cycles[1].second;
    if (min_node_of_loop(e2, arcs[lb]) < min_node_of_loop(e1, arcs[la])) {
      std::swap(e1, e2);
      std::swap(la, lb);
    }
    // walk hub path from e1 to e2
    std::vector<NodeId> hub_path{e1};
    std::vector<int> rec_path;
    int prev_rec = -1;
    NodeId cur = e1;
    while (cur != e2) {
      tick(stats);
      int next_rec = -1;
      for (int r : adj[cur])
        if (r != prev_rec) next_rec = r;
      if (next_rec < 0)
        return detect_fail<ChainPayload>("hub path interrupted");
      const CycleRec& rec = recs[next_rec];
      cur = (rec.a == cur) ? rec.b : rec.a;
      hub_path.push_back(cur);
      rec_path.push_back(next_rec);
      prev_rec = next_rec;
      if (hub_path.size() > shared.size())
        return detect_fail<ChainPayload>("hubs do not form a path");
    }
    if (hub_path.size() != shared.size())
      return detect_fail<ChainPayload>("hubs outside the hub path");
    chain.closed = false;
    chain.cycles.push_back(order_loop_from_anchor(e1, arcs[la]));
    for (size_t t = 0; t < rec_path.size(); ++t) {
      const CycleRec& rec = recs[rec_path[t]];
      NodeId tail = hub_path[t];       // shared with the previous cycle
      NodeId head = hub_path[t + 1];   // shared with the next cycle
      const Arc& head_tail =
          (arcs[rec.arc_ab].from == head) ? arcs[rec.arc_ab] : arcs[rec.arc_ba];
      const Arc& tail_head =
          (arcs[rec.arc_ab].from == tail) ? arcs[rec.arc_ab] : arcs[rec.arc_ba];
      chain.cycles.push_back(
          order_pair_cycle(head, tail, head_tail, tail_head));
    }
    chain.cycles.push_back(order_loop_from_successor(e2, arcs[lb]));
    for (size_t j = 0; j + 1 < chain.cycles.size(); ++j)
      chain.shared_pos.push_back(
          index_of(chain.cycles[j + 1], chain.cycles[j][0]));
  } else if (loop_cycles.empty()) {
    // closed chain: pair cycles form a single ring over all hubs
    if (shared.size() < 3)
      return detect_fail<ChainPayload>(
          "closed chain needs at least three cycles");
    for (NodeId a : shared) {
      tick(stats);
      if (adj[a].size() != 2)
        return detect_fail<ChainPayload>("hubs do not form a ring");
    }
    // pick the first cycle, then its direction, by smallest node content
    auto sorted_nodes = [&](const CycleRec& rec) {
      std::vector<NodeId> v{rec.a, rec.b};
      v.insert(v.end(), arcs[rec.arc_ab].interior.begin(),
               arcs[rec.arc_ab].interior.end());
      v.insert(v.end(), arcs[rec.arc_ba].interior.begin(),
               arcs[rec.arc_ba].interior.end());
      std::sort(v.begin(), v.end());
      return v;
    };
    int first = 0;
    std::vector<NodeId> first_key = sorted_nodes(recs[0]);
    for (int r = 1; r < static_cast<int>(recs.size()); ++r) {
      tick(stats);
      auto key = sorted_nodes(recs[r]);
      if (key < first_key) {
        first = r;
        first_key = std::move(key);
      }
    }
    int next_a = -1, next_b = -1;  // ring neighbours via hub a / hub b
    for (int r : adj[recs[first].a])
      if (r != first) next_a = r;
    for (int r : adj[recs[first].b])
      if (r != first) next_b = r;
    if (next_a < 0 || next_b < 0 || next_a == next_b)
      return detect_fail<ChainPayload>("hub ring malformed");
    bool towards_a = sorted_nodes(recs[next_a]) < sorted_nodes(recs[next_b]);
    // heads: cycle j's head is the hub it shares with cycle j+1
    std::vector<int> ring{first};
    std::vector<NodeId> heads{towards_a ? recs[first].a : recs[first].b};
    int cur_rec = towards_a ? next_a : next_b;
    while (cur_rec != first) {
      tick(stats);
      ring.push_back(cur_rec);
      NodeId entry = heads.back();
      NodeId exit =
          (recs[cur_rec].a == entry) ? recs[cur_rec].b : recs[cur_rec].a;
      heads.push_back(exit);
      int nxt = -1;
      for (int r : adj[exit])
        if (r != cur_rec) nxt = r;
      if (nxt < 0) return detect_fail<ChainPayload>("hub ring interrupted");
      cur_rec = nxt;
      if (ring.size() > recs.size())
        return detect_fail<ChainPayload>("hub ring malformed");
    }
    if (ring.size() != recs.size())
      return detect_fail<ChainPayload>("cycles outside the hub ring");
    chain.closed = true;
    const int m = static_cast<int>(ring.size());
    for (int j = 0; j < m; ++j) {
      const CycleRec& rec = recs[ring[j]];
      NodeId head = heads[j];
      NodeId other = (rec.a == head) ? rec.b : rec.a;
      const Arc& head_other =
          (arcs[rec.arc_ab].from == head) ? arcs[rec.arc_ab] : arcs[rec.arc_ba];
      const Arc& other_head =
          (arcs[rec.arc_ab].from == other) ? arcs[rec.arc_ab]
                                           : arcs[rec.arc_ba];
      chain.cycles.push_back(
          order_pair_cycle(head, other, head_other, other_head));
    }
    for (int j = 0; j < m; ++j)
      chain.shared_pos.push_back(
          index_of(chain.cycles[(j + 1) % m], chain.cycles[j][0]));
  } else {
    return detect_fail<ChainPayload>("wrong number of end cycles");
  }

  for (const auto& cyc : chain.cycles) {
    tick(stats);
    if (cyc.size() < 3)
      return detect_fail<ChainPayload>("cycle with fewer than 3 nodes");
  }
  for (int pos : chain.shared_pos)
    if (pos < 1)
      return detect_fail<ChainPayload>("shared node at a cycle head");
  return R{std::move(chain), {}};
}

namespace {

struct PartitionAttempt {
  std::optional<PartitionPayload> payload;
  std::string failure;
};

PartitionAttempt complete_partition(
    const Game& game, const std::vector<NodeId>& path,
    const std::vector<std::pair<int, NodeId>>& hits, DetectorStats* stats) {
  const int n = game.num_nodes();
  std::vector<char> in_path(n, 0);
  for (NodeId v : path) in_path[v] = 1;

  int first = -1, last = -1;
  for (const auto& [pos, src] : hits) {
    tick(stats);
    bool counts = pos > 0;
    if (pos == 0) {
      // a hit on the path head is the head's cycle edge unless the source
      // also has an edge leaving the path
      for (const Edge& e : game.out_edges(src))
        if (!in_path[e.dst]) counts = true;
    }
    if (counts) first = (first < 0) ? pos : std::min(first, pos);
    last = std::max(last, pos);
  }
  if (first < 0)
    return {std::nullopt, "candidate path receives no cross edge"};

  std::vector<char> in_bottom(n, 0);
  for (int p = first; p <= last; ++p) in_bottom[path[p]] = 1;
  NodeId bottom_head = path[first];
  const int bottom_size = last - first + 1;
  if (bottom_size >= n)
    return {std::nullopt, "bottom path swallows every node"};

  // cycle successor of each node
  std::vector<NodeId> succ(n, -1);
  for (NodeId u = 0; u < n; ++u) {
    tick(stats);
    auto out = game.out_edges(u);
    if (out.size() == 1) {
      succ[u] = out[0].dst;
      continue;
    }
    NodeId top_target = -1, head_target = -1;
    int top_count = 0;
    for (const Edge& e : out) {
      if (!in_bottom[e.dst]) {
        top_target = e.dst;
        ++top_count;
      } else if (e.dst == bottom_head) {
        head_target = e.dst;
      }
    }
    if (top_count > 1)
      return {std::nullopt, "cross edge pointing into the top part"};
    if (top_count == 1)
      succ[u] = top_target;
    else if (head_target >= 0)
      succ[u] = head_target;
    else
      return {std::nullopt, "node without a cycle successor"};
  }

  // walk the would-be cycle starting at the bottom head
  std::vector<NodeId> walk;
  walk.reserve(n);
  std::vector<char> visited(n, 0);
  NodeId cur = bottom_head;
  for (int step = 0; step < n; ++step) {
    tick(stats);
    if (visited[cur])
      return {std::nullopt, "cycle edges do not form a single cycle"};
    visited[cur] = 1;
    walk.push_back(cur);
    cur = succ[cur];
  }
  if (cur != bottom_head)
    return {std::nullopt, "cycle edges do not form a single cycle"};
  for (int p = 0; p < bottom_size; ++p) {
    tick(stats);
    if (walk[p] != path[first + p])
      return {std::nullopt, "bottom path not contiguous on the cycle"};
  }

  PartitionPayload part;
  part.top_size = n - bottom_size;
  part.cycle_order.assign(walk.begin() + bottom_size, walk.end());
  part.cycle_order.insert(part.cycle_order.end(), walk.begin(),
                          walk.begin() + bottom_size);

  std::vector<char> in_top(n, 0);
  for (int p = 0; p < part.top_size; ++p) in_top[part.cycle_order[p]] = 1;
  for (NodeId u = 0; u < n; ++u) {
    tick(stats);
    for (const Edge& e : game.out_edges(u)) {
      if (e.dst == succ[u]) continue;
      if (in_bottom[u])
        return {std::nullopt, "cross edge leaving the bottom part"};
      if (in_top[e.dst])
        return {std::nullopt, "cross edge pointing into the top part"};
      part.cross_edges.push_back(e);
    }
    for (const Edge& e : game.out_edges(u))
      if (e.dst == succ[u]) part.cycle_edges.push_back(e);
  }
  if (part.cross_edges.empty())
    return {std::nullopt, "no cross edges"};
  return {std::move(part), {}};
}

}  // namespace

Detected<PartitionPayload> detect_partition_cycle(const Game& game,
                                                  DetectorStats* stats) {
  const int n = game.num_nodes();
  if (n < 3) return detect_fail<PartitionPayload>("too few nodes");
  int num_cross = 0;
  for (NodeId i = 0; i < n; ++i) {
    tick(stats);
    if (game.out_degree(i) < 1 || game.in_degree(i) < 1)
      return detect_fail<PartitionPayload>("node missing cycle edges");
    num_cross += game.out_degree(i) - 1;
  }
  if (num_cross == 0)
    return detect_fail<PartitionPayload>(
        "no cross edges (plain cycle handled elsewhere)");

  // candidate bottom nodes: the ones without any cross edge out
  std::vector<char> cand(n, 0);
  std::vector<NodeId> succ_c(n, -1);
  std::vector<int> ind_c(n, 0);
  int cand_count = 0;
  for (NodeId i = 0; i < n; ++i) {
    tick(stats);
    if (game.out_degree(i) == 1) {
      cand[i] = 1;
      ++cand_count;
    }
  }
  if (cand_count == 0)
    return detect_fail<PartitionPayload>("every node has cross edges");
  for (NodeId i = 0; i < n; ++i) {
    tick(stats);
    if (!cand[i]) continue;
    NodeId d = game.out_edges(i)[0].dst;
    if (cand[d]) {
      succ_c[i] = d;
      if (++ind_c[d] > 1)
        return detect_fail<PartitionPayload>("candidate paths merge");
    }
  }
  // break any cycle among candidates (cannot appear in a real instance once
  // a cross edge exists, but arbitrary inputs must not loop us)
  {
    std::vector<char> state(n, 0);
    for (NodeId i = 0; i < n; ++i) {
      if (!cand[i] || state[i]) continue;
      NodeId cur = i;
      std::vector<NodeId> trail;
      while (cur >= 0 && cand[cur] && state[cur] == 0) {
        tick(stats);
        state[cur] = 1;
        trail.push_back(cur);
        cur = succ_c[cur];
      }
      if (cur >= 0 && state[cur] == 1) {
        // found a candidate cycle; cut the edge entering its smallest node
        NodeId smallest = cur, it = succ_c[cur];
        while (it != cur) {
          tick(stats);
          smallest = std::min(smallest, it);
          it = succ_c[it];
        }
        NodeId pred = cur;
        while (succ_c[pred] != smallest) pred = succ_c[pred];
        succ_c[pred] = -1;
        --ind_c[smallest];
      }
      for (NodeId v : trail) state[v] = 2;
    }
  }

  // assemble candidate paths
  std::vector<int> path_of(n, -1), pos_of(n, -1);
  std::vector<std::vector<NodeId>> paths;
  for (NodeId i = 0; i < n; ++i) {
    tick(stats);
    if (!cand[i] || ind_c[i] != 0) continue;
    std::vector<NodeId> path;
    NodeId cur = i;
    while (cur >= 0) {
      tick(stats);
      path_of[cur] = static_cast<int>(paths.size());
      pos_of[cur] = static_cast<int>(path.size());
      path.push_back(cur);
      cur = succ_c[cur];
    }
    paths.push_back(std::move(path));
  }

  // edges from cross-carrying nodes into candidate paths
  std::vector<std::vector<std::pair<int, NodeId>>> hits(paths.size());
  for (NodeId u = 0; u < n; ++u) {
    if (game.out_degree(u) < 2) continue;
    for (const Edge& e : game.out_edges(u)) {
      tick(stats);
      if (cand[e.dst]) hits[path_of[e.dst]].emplace_back(pos_of[e.dst], u);
    }
  }

  std::vector<int> strong, weak;
  for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
    tick(stats);
    if (hits[p].empty()) continue;
    bool is_strong = hits[p].size() >= 2;
    for (const auto& [pos, src] : hits[p])
      if (pos > 0) is_strong = true;
    (is_strong ? strong : weak).push_back(p);
  }
  if (strong.size() > 1)
    return detect_fail<PartitionPayload>(
        "cross edges target several candidate paths");

  std::string last_failure = "no candidate path receives a cross edge";
  std::vector<int> tries = strong.empty() ? weak : strong;
  for (int p : tries) {
    auto attempt = complete_partition(game, paths[p], hits[p], stats);
    if (attempt.payload) return {std::move(attempt.payload), {}};
    last_failure = attempt.failure;
  }
  return detect_fail<PartitionPayload>(last_failure);
}

GraphClass classify(const Game& game, DetectorStats* stats) {
  if (auto dag = detect_dag(game))
    return {ClassTag::Dag, std::move(*dag.payload)};
  if (auto cyc = detect_simple_cycle(game))
    return {ClassTag::SimpleCycle, std::move(*cyc.payload)};
  if (auto chain = detect_chain(game, stats)) {
    ClassTag tag =
        chain.payload->closed ? ClassTag::ClosedChain : ClassTag::OpenChain;
    return {tag, std::move(*chain.payload)};
  }
  if (auto part = detect_partition_cycle(game, stats))
    return {ClassTag::PartitionCycle, std::move(*part.payload)};
  return {ClassTag::Other, std::monostate{}};
}

std::optional<std::string> verify_chain_payload(const Game& game,
                                                const ChainPayload& chain) {
  const int m = chain.num_cycles();
  if (m < 2) return "chain needs at least two cycles";
  if (chain.closed && m < 3) return "closed chain needs at least three cycles";
  if (static_cast<int>(chain.shared_pos.size()) != (chain.closed ? m : m - 1))
    return "shared positions list has the wrong length";

  std::set<std::pair<NodeId, NodeId>> game_edges;
  for (const Edge& e : game.edges()) game_edges.insert({e.src, e.dst});
  std::set<std::pair<NodeId, NodeId>> used;
  std::vector<int> appearances(game.num_nodes(), 0);

  for (const auto& cyc : chain.cycles) {
    if (cyc.size() < 3) return "cycle with fewer than 3 nodes";
    for (size_t t = 0; t < cyc.size(); ++t) {
      NodeId from = cyc[t], to = cyc[(t + 1) % cyc.size()];
      if (from < 0 || from >= game.num_nodes()) return "node id out of range";
      ++appearances[from];
      if (!game_edges.count({from, to})) return "cycle uses a missing edge";
      if (!used.insert({from, to}).second) return "edge used by two cycles";
    }
  }
  if (used.size() != game_edges.size())
    return "graph has edges outside the chain cycles";

  std::set<NodeId> designated;
  const int num_shared = chain.closed ? m : m - 1;
  for (int j = 0; j < num_shared; ++j) {
    NodeId s = chain.cycles[j][0];
    designated.insert(s);
    int pos = chain.shared_pos[j];
    const auto& next = chain.cycles[(j + 1) % m];
    if (pos < 1 || pos >= static_cast<int>(next.size()))
      return "shared position out of range";
    if (next[pos] != s) return "shared position does not match";
  }
  for (NodeId v = 0; v < game.num_nodes(); ++v) {
    bool shared = designated.count(v) > 0;
    if (appearances[v] != (shared ? 2 : 1))
      return shared ? "shared node missing from a cycle"
                    : "node on an unexpected number of cycles";
  }
  return std::nullopt;
}

std::optional<std::string> verify_partition_payload(
    const Game& game, const PartitionPayload& part) {
  const int n = game.num_nodes();
  if (static_cast<int>(part.cycle_order.size()) != n)
    return "cycle order does not cover every node";
  if (part.top_size < 1 || part.top_size >= n)
    return "one side of the partition is empty";
  std::vector<char> seen(n, 0);
  for (NodeId v : part.cycle_order) {
    if (v < 0 || v >= n || seen[v]) return "cycle order is not a permutation";
    seen[v] = 1;
  }
  std::vector<char> top(n, 0);
  for (int i = 0; i < part.top_size; ++i) top[part.cycle_order[i]] = 1;

  std::map<std::pair<NodeId, NodeId>, Weight> game_edges;
  for (const Edge& e : game.edges()) game_edges[{e.src, e.dst}] = e.weight;
  if (part.cycle_edges.size() + part.cross_edges.size() != game_edges.size())
    return "edge partition does not cover the edge set";

  std::set<std::pair<NodeId, NodeId>> cyc;
  for (const Edge& e : part.cycle_edges) {
    auto it = game_edges.find({e.src, e.dst});
    if (it == game_edges.end() || it->second != e.weight)
      return "cycle edge missing from the game";
    if (!cyc.insert({e.src, e.dst}).second) return "duplicate cycle edge";
  }
  for (int i = 0; i < n; ++i) {
    NodeId from = part.cycle_order[i];
    NodeId to = part.cycle_order[(i + 1) % n];
    if (!cyc.count({from, to})) return "cycle order does not follow cycle edges";
  }
  for (const Edge& e : part.cross_edges) {
    auto it = game_edges.find({e.src, e.dst});
    if (it == game_edges.end() || it->second != e.weight)
      return "cross edge missing from the game";
    if (cyc.count({e.src, e.dst})) return "edge listed as both cycle and cross";
    if (!top[e.src]) return "cross edge leaving the bottom part";
    if (top[e.dst]) return "cross edge pointing into the top part";
  }
  if (part.cross_edges.empty()) return "partition cycle without cross edges";
  return std::nullopt;
}

SplitResult split_weighted_cross_edges(const Game& game,
                                       const PartitionPayload& part) {
  const int n = game.num_nodes();
  std::vector<char> top(n, 0);
  for (int i = 0; i < part.top_size; ++i) top[part.cycle_order[i]] = 1;
  for (const Edge& e : part.cycle_edges)
    if (e.weight != 1 && !(top[e.src] && top[e.dst]))
      fail(ErrorKind::NotGuaranteed,
           "unsupported weight placement: cycle edge " + std::to_string(e.src) +
               "->" + std::to_string(e.dst) +
               " outside the top part carries weight " +
               std::to_string(e.weight));

  // one extra clone per unit of weight beyond 1, summed over the node's
  // cross edges; each split edge draws its copies from the node's run
  std::vector<Weight> slots(n, 1);
  for (const Edge& e : part.cross_edges)
    if (e.weight > 1) slots[e.src] += e.weight - 1;

  SplitResult out;
  out.origin_of.resize(n);
  std::vector<std::vector<NodeId>> slot_ids(n);
  for (NodeId i = 0; i < n; ++i) {
    out.origin_of[i] = i;
    slot_ids[i].push_back(i);
  }
  int next_id = n;
  for (int i = 0; i < part.top_size; ++i) {
    NodeId u = part.cycle_order[i];
    for (Weight s = 1; s < slots[u]; ++s) {
      slot_ids[u].push_back(next_id);
      out.origin_of.push_back(u);
      ++next_id;
    }
  }
  out.added_nodes = next_id - n;

  std::vector<std::vector<Colour>> colour_sets(next_id);
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;
  for (NodeId i = 0; i < next_id; ++i) {
    NodeId orig = out.origin_of[i];
    auto cs = game.colour_set(orig);
    colour_sets[i].assign(cs.begin(), cs.end());
  }
  for (NodeId i = 0; i < n; ++i)
    for (const auto& [c, w] : game.bonuses_of(i))
      bonuses.push_back({{i, c}, w});

  std::vector<Edge> edges;
  PartitionPayload np;
  np.top_size = part.top_size + out.added_nodes;
  for (int i = 0; i < static_cast<int>(part.cycle_order.size()); ++i) {
    NodeId u = part.cycle_order[i];
    for (NodeId id : slot_ids[u]) np.cycle_order.push_back(id);
  }
  for (const Edge& e : part.cycle_edges) {
    // the incoming edge attaches to the first slot, the outgoing one to the
    // last; clone slots are linked by unit edges
    Edge moved = e;
    moved.src = slot_ids[e.src].back();
    moved.dst = slot_ids[e.dst].front();
    edges.push_back(moved);
    np.cycle_edges.push_back(moved);
  }
  for (NodeId u = 0; u < n; ++u) {
    const auto& ids = slot_ids[u];
    for (size_t s = 0; s + 1 < ids.size(); ++s) {
      Edge link{ids[s], ids[s + 1], 1};
      edges.push_back(link);
      np.cycle_edges.push_back(link);
    }
  }
  std::vector<size_t> cursor(n, 1);  // next unused clone slot per node
  for (const Edge& e : part.cross_edges) {
    if (e.weight <= 1) {
      edges.push_back(e);
      np.cross_edges.push_back(e);
      continue;
    }
    // the node itself supports the target once, its next w-1 clones add
    // the rest
    Edge unit{e.src, e.dst, 1};
    edges.push_back(unit);
    np.cross_edges.push_back(unit);
    for (Weight s = 1; s < e.weight; ++s) {
      Edge copy{slot_ids[e.src][cursor[e.src]++], e.dst, 1};
      edges.push_back(copy);
      np.cross_edges.push_back(copy);
    }
  }

  out.game = Game::create(next_id, game.colour_names(), std::move(edges),
                          std::move(colour_sets), std::move(bonuses));
  out.payload = std::move(np);
  return out;
}

std::string to_dot(const Game& game, const GraphClass* cls) {
  static const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                   "#cab2d6", "#ffff99", "#1f78b4", "#33a02c"};
  std::vector<std::string> fill(game.num_nodes());
  if (cls) {
    if (const auto* chain = std::get_if<ChainPayload>(&cls->payload)) {
      for (int j = 0; j < chain->num_cycles(); ++j)
        for (NodeId v : chain->cycles[j])
          if (fill[v].empty()) fill[v] = kPalette[j % 8];
    } else if (const auto* part = std::get_if<PartitionPayload>(&cls->payload)) {
      for (int i = 0; i < static_cast<int>(part->cycle_order.size()); ++i)
        fill[part->cycle_order[i]] =
            i < part->top_size ? "#a6cee3" : "#fdbf6f";
    }
  }
  std::ostringstream os;
  os << "digraph game {\n";
  for (NodeId i = 0; i < game.num_nodes(); ++i) {
    os << "  n" << i << " [label=\"" << i << "\\n{";
    bool comma = false;
    for (Colour c : game.colour_set(i)) {
      if (comma) os << ",";
      os << game.colour_name(c);
      comma = true;
    }
    os << "}\"";
    if (!fill[i].empty())
      os << ", style=filled, fillcolor=\"" << fill[i] << "\"";
    os << "];\n";
  }
  for (const Edge& e : game.edges()) {
    os << "  n" << e.src << " -> n" << e.dst;
    if (e.weight != 1) os << " [label=\"" << e.weight << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace coordgames
