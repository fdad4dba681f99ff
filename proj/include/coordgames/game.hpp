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

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coordgames {

using NodeId = int32_t;
using Colour = int32_t;
using Weight = int64_t;

inline constexpr Colour kNoColour = -1;

enum class ErrorKind {
  Structural,
  MalformedDeviation,
  SizeLimit,
  NotGuaranteed,
  Context,
  Embedding,
  Generation,
  Lookup,
  Parse,
};

class GameError : public std::runtime_error {
 public:
  GameError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw GameError(kind, msg);
}

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  Weight weight = 1;
};

/// One colour per node, indexed by node id.
using JointStrategy = std::vector<Colour>;

/// A joint recolouring of a coalition. Every listed node changes colour;
/// the node set of `moves` is exactly the coalition.
struct Deviation {
  std::vector<std::pair<NodeId, Colour>> moves;  // sorted by node id

  std::vector<NodeId> coalition() const;
  bool singleton() const { return moves.size() == 1; }
};

/// Immutable game instance: a weighted digraph, per-node colour sets and a
/// bonus table. Safe to share across concurrent runs; all operations on it
/// are pure functions.
class Game {
 public:
  Game() = default;  // empty placeholder; build real games via create

  /// Validates all structural invariants (no self loops, no parallel edges,
  /// colours in range, bonus keys inside the node's colour set, non-negative
  /// weights). Bonus tables holding negative values are shifted per node so
  /// the stored minimum is zero; best responses are unaffected by the shift.
  static Game create(int num_nodes, std::vector<std::string> colour_names,
                     std::vector<Edge> edges,
                     std::vector<std::vector<Colour>> colour_sets,
                     std::vector<std::pair<std::pair<NodeId, Colour>, Weight>>
                         bonuses = {});

  int num_nodes() const { return num_nodes_; }
  int num_colours() const { return static_cast<int>(colour_names_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Edge> in_edges(NodeId i) const;
  std::span<const Edge> out_edges(NodeId i) const;
  int in_degree(NodeId i) const { return static_cast<int>(in_edges(i).size()); }
  int out_degree(NodeId i) const {
    return static_cast<int>(out_edges(i).size());
  }

  std::span<const Colour> colour_set(NodeId i) const;
  bool has_colour(NodeId i, Colour c) const;
  Weight bonus(NodeId i, Colour c) const;
  std::span<const std::pair<Colour, Weight>> bonuses_of(NodeId i) const;

  const std::string& colour_name(Colour c) const { return colour_names_[c]; }
  const std::vector<std::string>& colour_names() const { return colour_names_; }
  std::optional<Colour> find_colour(std::string_view name) const;

  /// Number of joint strategies, capped at 2^62 to avoid overflow.
  uint64_t num_profiles() const;

  /// True iff the node's bonus vector is non-constant over its colour set.
  /// A constant bonus can never change a best response.
  bool has_effective_bonus(NodeId i) const;
  int count_effective_bonus_nodes() const;
  int count_nontrivial_weight_edges() const;  // edges with weight != 1
  bool unweighted() const;                    // all weights == 1

 private:
  int num_nodes_ = 0;
  std::vector<std::string> colour_names_;
  std::vector<Edge> edges_;
  // CSR layout for in/out adjacency.
  std::vector<int> in_off_, out_off_;
  std::vector<Edge> in_edges_, out_edges_;
  std::vector<int> cs_off_;
  std::vector<Colour> cs_vals_;  // sorted per node
  std::vector<int> bonus_off_;
  std::vector<std::pair<Colour, Weight>> bonus_vals_;  // sorted per node
};

void validate_strategy(const Game& game, const JointStrategy& s);

/// Total weight of incoming edges whose source picked the same colour as
/// node i, plus the node's bonus for its own colour.
Weight payoff(const Game& game, const JointStrategy& s, NodeId i);

/// Payoff node i would get by playing `c` while everyone else keeps s.
Weight payoff_if(const Game& game, const JointStrategy& s, NodeId i, Colour c);

/// The argmax set of payoff_if over the node's colour set; sorted, non-empty.
std::vector<Colour> best_responses(const Game& game, const JointStrategy& s,
                                   NodeId i);

struct NashVerdict {
  bool nash = false;
  NodeId witness_node = -1;    // lowest-id node not at a best response
  Colour witness_colour = kNoColour;  // lowest strictly improving colour
};

NashVerdict is_nash(const Game& game, const JointStrategy& s);

/// Applies a deviation and reports whether it was strictly profitable for
/// every coalition member. Throws MalformedDeviation if a member keeps its
/// colour or picks a colour outside its set.
std::pair<JointStrategy, bool> apply_deviation(const Game& game,
                                               const JointStrategy& s,
                                               const Deviation& d);

/// Largest set K of nodes that can all switch to colour `c` such that every
/// member strictly gains when the whole set switches. Computed as a greatest
/// fixpoint: start from all candidate movers and drop members until everyone
/// left strictly improves. Any profitable single-colour coalition for `c` is
/// a subset of the result, so an empty result proves there is none.
std::vector<NodeId> max_profitable_unicolour_coalition(const Game& game,
                                                       const JointStrategy& s,
                                                       Colour c);

/// Restricting any profitable coalition deviation to one of its new-colour
/// classes keeps it profitable (members of the class only gain support).
/// Hence a profitable coalition of size <= k exists iff a single-colour one
/// does, which is what the pruned searches below enumerate.
struct KEquilibriumVerdict {
  bool yes = false;
  std::optional<Deviation> witness;  // least witness under (size, nodes, colour)
};

struct SearchLimits {
  uint64_t max_profiles = uint64_t(1) << 20;
};

KEquilibriumVerdict is_k_equilibrium(const Game& game, const JointStrategy& s,
                                     int k, const SearchLimits& limits = {});

/// True iff no coalition of any size can profitably deviate. Polynomial:
/// checks that the unicolour fixpoint is empty for every colour.
bool is_strong_equilibrium(const Game& game, const JointStrategy& s);

}  // namespace coordgames
