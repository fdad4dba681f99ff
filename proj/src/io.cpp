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
#include "coordgames/io.hpp"

#include <fstream>

namespace coordgames {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

[[noreturn]] void parse_fail(const std::string& what) {
  fail(ErrorKind::Parse, what);
}

Colour colour_from_name(const Game& game, const json& name,
                        const std::string& where) {
  if (!name.is_string()) parse_fail(where + ": expected a colour name");
  auto c = game.find_colour(name.get<std::string>());
  if (!c) parse_fail(where + ": unknown colour '" + name.get<std::string>() + "'");
  return *c;
}

JointStrategy strategy_from_json(const Game& game, const json& arr,
                                 const std::string& where) {
  if (!arr.is_array() ||
      static_cast<int>(arr.size()) != game.num_nodes())
    parse_fail(where + ": expected one colour name per node");
  JointStrategy s(game.num_nodes());
  for (NodeId i = 0; i < game.num_nodes(); ++i)
    s[i] = colour_from_name(game, arr[i],
                            where + "[" + std::to_string(i) + "]");
  validate_strategy(game, s);
  return s;
}

ordered_json strategy_to_json(const Game& game, const JointStrategy& s) {
  ordered_json arr = ordered_json::array();
  for (NodeId i = 0; i < game.num_nodes(); ++i)
    arr.push_back(game.colour_name(s[i]));
  return arr;
}

}  // namespace

ordered_json game_to_json(const Game& game,
                          const std::optional<JointStrategy>& initial) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["nodes"] = game.num_nodes();
  doc["colours"] = game.colour_names();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : game.edges())
    edges.push_back(ordered_json::array({e.src, e.dst, e.weight}));
  doc["edges"] = std::move(edges);
  ordered_json sets = ordered_json::array();
  for (NodeId i = 0; i < game.num_nodes(); ++i) {
    ordered_json one = ordered_json::array();
    for (Colour c : game.colour_set(i)) one.push_back(game.colour_name(c));
    sets.push_back(std::move(one));
  }
  doc["colour_sets"] = std::move(sets);
  ordered_json bonuses = ordered_json::array();
  for (NodeId i = 0; i < game.num_nodes(); ++i)
    for (const auto& [c, w] : game.bonuses_of(i))
      if (w != 0)
        bonuses.push_back(ordered_json::array({i, game.colour_name(c), w}));
  doc["bonuses"] = std::move(bonuses);
  if (initial) doc["initial"] = strategy_to_json(game, *initial);
  return doc;
}

LoadedGame game_from_json(const json& doc) {
  if (!doc.is_object()) parse_fail("top level: expected an object");
  for (const char* field : {"format_version", "nodes", "colours", "edges",
                            "colour_sets", "bonuses"})
    if (!doc.contains(field))
      parse_fail(std::string("missing field '") + field + "'");
  if (doc["format_version"].get<int>() != kFormatVersion)
    parse_fail("unsupported format_version");
  int nodes = doc["nodes"].get<int>();
  std::vector<std::string> colours =
      doc["colours"].get<std::vector<std::string>>();

  auto find_colour = [&](const json& name, const std::string& where) {
    if (!name.is_string()) parse_fail(where + ": expected a colour name");
    for (size_t c = 0; c < colours.size(); ++c)
      if (colours[c] == name.get<std::string>()) return Colour(c);
    parse_fail(where + ": unknown colour '" + name.get<std::string>() + "'");
  };

  std::vector<Edge> edges;
  for (size_t t = 0; t < doc["edges"].size(); ++t) {
    const json& e = doc["edges"][t];
    std::string where = "edges[" + std::to_string(t) + "]";
    if (!e.is_array() || e.size() != 3)
      parse_fail(where + ": expected [src, dst, weight]");
    edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>(),
                     e[2].get<Weight>()});
  }
  if (static_cast<int>(doc["colour_sets"].size()) != nodes)
    parse_fail("colour_sets: expected one set per node");
  std::vector<std::vector<Colour>> sets(nodes);
  for (int i = 0; i < nodes; ++i) {
    std::string where = "colour_sets[" + std::to_string(i) + "]";
    if (!doc["colour_sets"][i].is_array()) parse_fail(where + ": expected a list");
    for (const json& name : doc["colour_sets"][i])
      sets[i].push_back(find_colour(name, where));
  }
  std::vector<std::pair<std::pair<NodeId, Colour>, Weight>> bonuses;
  for (size_t t = 0; t < doc["bonuses"].size(); ++t) {
    const json& b = doc["bonuses"][t];
    std::string where = "bonuses[" + std::to_string(t) + "]";
    if (!b.is_array() || b.size() != 3)
      parse_fail(where + ": expected [node, colour, value]");
    bonuses.push_back(
        {{b[0].get<NodeId>(), find_colour(b[1], where)}, b[2].get<Weight>()});
  }

  LoadedGame out{Game::create(nodes, std::move(colours), std::move(edges),
                              std::move(sets), std::move(bonuses)),
                 std::nullopt};
  if (doc.contains("initial"))
    out.initial = strategy_from_json(out.game, doc["initial"], "initial");
  return out;
}

LoadedGame load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open game file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  try {
    return game_from_json(doc);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

void save_game_file(const std::string& path, const Game& game,
                    const std::optional<JointStrategy>& initial) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Parse, "cannot write game file: " + path);
  out << canonical_dump(game_to_json(game, initial));
}

ordered_json trace_to_json(const Game& game, const Trace& trace) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["initial"] = strategy_to_json(game, trace.initial);
  ordered_json steps = ordered_json::array();
  for (const TraceStep& step : trace.steps) {
    ordered_json js;
    ordered_json moves = ordered_json::array();
    for (const auto& [node, colour] : step.deviation.moves)
      moves.push_back(ordered_json::array({node, game.colour_name(colour)}));
    js["moves"] = std::move(moves);
    ordered_json pays = ordered_json::array();
    for (const auto& [before, after] : step.member_payoffs)
      pays.push_back(ordered_json::array({before, after}));
    js["payoffs"] = std::move(pays);
    steps.push_back(std::move(js));
  }
  doc["steps"] = std::move(steps);
  doc["terminal"] = strategy_to_json(game, trace.terminal);
  doc["verdict"] = to_string(trace.verdict);
  doc["step_count"] = trace.num_steps();
  ordered_json meas;
  meas["regime"] = trace.measures.regime;
  meas["experimental"] = trace.measures.experimental;
  meas["bound_cap"] = trace.measures.bound_cap;
  meas["guard"] = trace.measures.guard_values;
  meas["stable_cycles"] = trace.measures.stable_cycles;
  meas["x_sizes"] = trace.measures.x_sizes;
  meas["expanded_nodes"] = trace.measures.expanded_nodes;
  meas["expanded_top"] = trace.measures.expanded_top;
  doc["measures"] = std::move(meas);
  return doc;
}

Trace trace_from_json(const Game& game, const json& doc) {
  if (!doc.is_object()) parse_fail("trace: expected an object");
  for (const char* field : {"initial", "steps", "terminal", "verdict"})
    if (!doc.contains(field))
      parse_fail(std::string("trace: missing field '") + field + "'");
  Trace trace;
  trace.initial = strategy_from_json(game, doc["initial"], "initial");
  for (size_t t = 0; t < doc["steps"].size(); ++t) {
    const json& js = doc["steps"][t];
    std::string where = "steps[" + std::to_string(t) + "]";
    TraceStep step;
    if (!js.contains("moves") || !js["moves"].is_array())
      parse_fail(where + ": missing moves");
    for (const json& mv : js["moves"]) {
      if (!mv.is_array() || mv.size() != 2)
        parse_fail(where + ": move must be [node, colour]");
      step.deviation.moves.emplace_back(
          mv[0].get<NodeId>(), colour_from_name(game, mv[1], where));
    }
    if (js.contains("payoffs"))
      for (const json& pp : js["payoffs"]) {
        if (!pp.is_array() || pp.size() != 2)
          parse_fail(where + ": payoff entry must be [before, after]");
        step.member_payoffs.emplace_back(pp[0].get<Weight>(),
                                         pp[1].get<Weight>());
      }
    trace.steps.push_back(std::move(step));
  }
  trace.terminal = strategy_from_json(game, doc["terminal"], "terminal");
  std::string verdict = doc["verdict"].get<std::string>();
  if (verdict == "nash") trace.verdict = TerminalVerdict::Nash;
  else if (verdict == "strong") trace.verdict = TerminalVerdict::Strong;
  else if (verdict == "budget") trace.verdict = TerminalVerdict::Budget;
  else if (verdict == "cycle-detected")
    trace.verdict = TerminalVerdict::CycleDetected;
  else parse_fail("trace: unknown verdict '" + verdict + "'");
  if (doc.contains("measures")) {
    const json& meas = doc["measures"];
    auto& m = trace.measures;
    if (meas.contains("regime")) m.regime = meas["regime"].get<std::string>();
    if (meas.contains("experimental"))
      m.experimental = meas["experimental"].get<bool>();
    if (meas.contains("bound_cap")) m.bound_cap = meas["bound_cap"].get<uint64_t>();
    if (meas.contains("guard"))
      m.guard_values = meas["guard"].get<std::vector<int>>();
    if (meas.contains("stable_cycles"))
      m.stable_cycles = meas["stable_cycles"].get<std::vector<int>>();
    if (meas.contains("x_sizes"))
      m.x_sizes = meas["x_sizes"].get<std::vector<int>>();
    if (meas.contains("expanded_nodes"))
      m.expanded_nodes = meas["expanded_nodes"].get<int>();
    if (meas.contains("expanded_top"))
      m.expanded_top = meas["expanded_top"].get<int>();
  }
  return trace;
}

Trace load_trace_file(const Game& game, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open trace file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  try {
    return trace_from_json(game, doc);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

void save_trace_file(const std::string& path, const Game& game,
                     const Trace& trace) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Parse, "cannot write trace file: " + path);
  out << canonical_dump(trace_to_json(game, trace));
}

ordered_json report_to_json(const Game& game, const StateGraphReport& report) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["num_states"] = report.num_states;
  doc["nash_count"] = report.nash_states.size();
  doc["strong_count"] = report.strong_states.size();
  doc["has_fip"] = report.has_fip;
  doc["weakly_acyclic"] = report.weakly_acyclic;
  if (report.c_weakly_acyclic)
    doc["c_weakly_acyclic"] = *report.c_weakly_acyclic;
  else
    doc["c_weakly_acyclic"] = nullptr;
  doc["max_finite_path"] = report.max_finite_path();
  doc["unreachable_states"] = report.unreachable_states();
  doc["state_encoding"] =
      "mixed-radix over per-node colour-set indices, node 0 least significant";
  if (report.num_states <= 4096) {
    StateSpace space(game, report.num_states);
    ordered_json nash = ordered_json::array();
    for (uint64_t idx : report.nash_states)
      nash.push_back(strategy_to_json(game, space.state_at(idx)));
    doc["nash_states"] = std::move(nash);
    ordered_json strong = ordered_json::array();
    for (uint64_t idx : report.strong_states)
      strong.push_back(strategy_to_json(game, space.state_at(idx)));
    doc["strong_states"] = std::move(strong);
    doc["shortest_path_len"] = report.shortest_path_len;
  }
  if (report.num_states <= 256) {
    // full dump of the unilateral step relation for tiny spaces
    StateSpace space(game, report.num_states);
    ordered_json edges = ordered_json::array();
    for (uint64_t idx = 0; idx < report.num_states; ++idx) {
      JointStrategy s = space.state_at(idx);
      for (NodeId i = 0; i < game.num_nodes(); ++i) {
        Weight cur = payoff_if(game, s, i, s[i]);
        for (Colour c : game.colour_set(i)) {
          if (c == s[i] || payoff_if(game, s, i, c) <= cur) continue;
          JointStrategy t = s;
          t[i] = c;
          edges.push_back(ordered_json::array({idx, space.index_of(t)}));
        }
      }
    }
    doc["improvement_edges"] = std::move(edges);
  }
  return doc;
}

std::string canonical_dump(const ordered_json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace coordgames
