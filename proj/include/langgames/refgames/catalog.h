// Copyright 2026 The Langgames Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LANGGAMES_REFGAMES_CATALOG_H_
#define LANGGAMES_REFGAMES_CATALOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "langgames/games/game.h"

namespace langgames {

// Built-in games:
//   gridworld-nav  P = {p1, N}; p1 navigates, N informs on the available
//                  moves after each one; success on reaching the goal.
//                  Overrides: layout fields or "map", "timeout",
//                  "max_steps", "observability".
//   free-chat      P = {p1, p2, N}; unrestricted utterances, inert Nature,
//                  free initiative, everything observed by everyone, always
//                  undecided. Overrides: "max_steps", "observability".
//   qa-game        P = {asker, answerer, N}; N announces a grid scene, the
//                  asker poses a grid-qa question, the answerer replies;
//                  success iff the reply matches the grid-qa oracle.
//                  Overrides: "width", "height", "agent", "goal",
//                  "timeout", "max_steps", "observability".
//
// "observability" overrides are {"entries": [{"player", "kind",
// "observers"}]} and replace the listed entries, marking the rule deviant.
//
// Throws NotFoundError for unknown names, ConstructionError or ConfigError
// for overrides that break an invariant.
GameSpec LoadBuiltin(std::string_view name,
                     const nlohmann::json& overrides = nlohmann::json::object());

std::vector<std::string> BuiltinGameNames();

// Policy bindings (see policies.h) that drive a built-in to a verdict.
nlohmann::json DemoPolicyBindings(std::string_view name);

}  // namespace langgames

#endif  // LANGGAMES_REFGAMES_CATALOG_H_
