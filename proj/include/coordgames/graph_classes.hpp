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
#include <string>
#include <variant>
#include <vector>

#include "coordgames/game.hpp"

namespace coordgames {

enum class ClassTag { Dag, SimpleCycle, OpenChain, ClosedChain, PartitionCycle, Other };

std::string to_string(ClassTag tag);

struct DagPayload {
  std::vector<NodeId> topo_order;
};

struct CyclePayload {
  std::vector<NodeId> order;  // order[t] -> order[(t+1) % n] are the edges
};

/// A chain of m simple cycles. cycles[j] lists cycle j's nodes in edge
/// order, starting at its head: the node shared with cycle j+1 (for the last
/// cycle of an open chain, at its successor inside that cycle). shared_pos[j]
/// is the index of cycles[j][0] inside cycles[j+1]; a closed chain has one
/// entry per cycle, with the last one indexing into cycles[0].
struct ChainPayload {
  bool closed = false;
  std::vector<std::vector<NodeId>> cycles;
  std::vector<int> shared_pos;

  int num_cycles() const { return static_cast<int>(cycles.size()); }
  int max_cycle_size() const;
};

/// A simple cycle over all nodes plus cross edges from the top path into the
/// bottom path. cycle_order lists the full cycle, top path first; top_size
/// is |V_T|.
struct PartitionPayload {
  std::vector<NodeId> cycle_order;
  int top_size = 0;
  std::vector<Edge> cycle_edges;
  std::vector<Edge> cross_edges;

  bool in_top(NodeId node) const;
  int bottom_size() const {
    return static_cast<int>(cycle_order.size()) - top_size;
  }
};

struct GraphClass {
  ClassTag tag = ClassTag::Other;
  std::variant<std::monostate, DagPayload, CyclePayload, ChainPayload,
               PartitionPayload>
      payload;
};

/// Loop-iteration counter for the linear-time guarantees of the detectors.
struct DetectorStats {
  uint64_t ops = 0;
};

template <typename T>
struct Detected {
  std::optional<T> payload;
  std::string failure;  // names the violated condition when detection fails

  explicit operator bool() const { return payload.has_value(); }
};

Detected<DagPayload> detect_dag(const Game& game);
Detected<CyclePayload> detect_simple_cycle(const Game& game);
Detected<ChainPayload> detect_chain(const Game& game,
                                    DetectorStats* stats = nullptr);
Detected<PartitionPayload> detect_partition_cycle(
    const Game& game, DetectorStats* stats = nullptr);

/// First match wins, in the order Dag, SimpleCycle, OpenChain/ClosedChain,
/// PartitionCycle; everything else is Other.
GraphClass classify(const Game& game, DetectorStats* stats = nullptr);

/// Re-verification of decomposition invariants along an independent code
/// path from the detectors. Returns the violated condition, if any.
std::optional<std::string> verify_chain_payload(const Game& game,
                                                const ChainPayload& chain);
std::optional<std::string> verify_partition_payload(
    const Game& game, const PartitionPayload& part);

/// Rewrites every cross edge of weight w >= 2 into w unit cross edges by
/// cloning the source node into a run of w copy nodes on the cycle. Clones
/// that follow their predecessor behave exactly like the weighted original,
/// so improvement paths of the expanded game pull back to the input game.
struct SplitResult {
  Game game;
  PartitionPayload payload;
  std::vector<NodeId> origin_of;  // expanded node id -> original node id
  int added_nodes = 0;
};

SplitResult split_weighted_cross_edges(const Game& game,
                                       const PartitionPayload& part);

/// Graphviz export; when a classification is given, nodes are coloured by
/// cycle membership or by top/bottom side.
std::string to_dot(const Game& game, const GraphClass* cls = nullptr);

}  // namespace coordgames
