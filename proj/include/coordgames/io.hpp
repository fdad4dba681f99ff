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

#include <json.hpp>
#include <optional>
#include <string>

#include "coordgames/dynamics.hpp"
#include "coordgames/game.hpp"
#include "coordgames/oracle.hpp"

namespace coordgames {

struct LoadedGame {
  Game game;
  std::optional<JointStrategy> initial;
};

/// Game document: format_version, nodes, colours, edges [src, dst, weight],
/// colour_sets (colour names per node), bonuses [node, colour, value] and an
/// optional initial strategy. Writing then parsing is the identity.
nlohmann::ordered_json game_to_json(const Game& game,
                                    const std::optional<JointStrategy>& initial);
LoadedGame game_from_json(const nlohmann::json& doc);
LoadedGame load_game_file(const std::string& path);
void save_game_file(const std::string& path, const Game& game,
                    const std::optional<JointStrategy>& initial);

nlohmann::ordered_json trace_to_json(const Game& game, const Trace& trace);
Trace trace_from_json(const Game& game, const nlohmann::json& doc);
Trace load_trace_file(const Game& game, const std::string& path);
void save_trace_file(const std::string& path, const Game& game,
                     const Trace& trace);

/// Report document; full state listings are included only for small spaces.
nlohmann::ordered_json report_to_json(const Game& game,
                                      const StateGraphReport& report);

std::string canonical_dump(const nlohmann::ordered_json& doc);

}  // namespace coordgames
