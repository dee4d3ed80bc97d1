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

#ifndef LANGGAMES_REFGAMES_POLICIES_H_
#define LANGGAMES_REFGAMES_POLICIES_H_

#include <cstdint>
#include <string>

#include "json.hpp"
#include "langgames/games/game.h"
#include "langgames/games/orchestrator.h"

namespace langgames {

// Builds a policy for `player` from a binding:
//   {"type": "scripted", "actions": [{"kind", "payload"}...], "cycle": bool}
//   {"type": "scripted", "kind": k, "payloads": [...], "cycle": bool}
//   {"type": "random"}           uniform over the enumerable part of the space
//   {"type": "bfs"}              shortest-path follower (gridworld games)
//   {"type": "canned", "utterances": [...]}   cycles through the list
//   {"type": "qa-asker", "direction": d?}     random direction when absent
//   {"type": "qa-answerer", "mode": "oracle" | "random" | "contrary"}
// Randomized policies draw from `seed` only. Throws ConfigError.
Policy MakePolicy(const nlohmann::json& binding, const GameSpec& spec,
                  const std::string& player, std::uint64_t seed);

// One policy per regular player, each seeded from the run seed and its
// player id. Throws ConfigError for missing or unknown players.
PolicyMap MakePolicies(const nlohmann::json& bindings, const GameSpec& spec,
                       std::uint64_t run_seed);

}  // namespace langgames

#endif  // LANGGAMES_REFGAMES_POLICIES_H_
