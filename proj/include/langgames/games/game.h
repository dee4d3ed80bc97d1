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

#ifndef LANGGAMES_GAMES_GAME_H_
#define LANGGAMES_GAMES_GAME_H_

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "langgames/core/action.h"
#include "langgames/core/errors.h"
#include "langgames/games/rules.h"
#include "langgames/worlds/environment.h"

namespace langgames {

// Nature's behavior. `respond` sees the environment state and the tokens
// Nature has observed, nothing else; nullopt means "no response now".
struct NaturePolicy {
  std::function<std::optional<Action>(const State& env_state,
                                      std::span<const ActionToken> observed)>
      respond;
  nlohmann::json descriptor;
};

// Never responds.
NaturePolicy InertNature();

// An interaction game: players (one of them Nature), their action spaces,
// observability, turn taking, evaluation, and an optional environment that
// Nature relays.
struct GameSpec {
  std::string name;
  std::string description;
  std::vector<Player> players;
  std::map<std::string, ActionSpace> spaces;
  ObservabilityRule observability;
  TurnRule turn;
  EvaluationRule evaluation;
  std::optional<EnvironmentSpec> environment;
  NaturePolicy nature;
  int default_max_steps = 100;

  const Player* FindPlayer(std::string_view id) const;
  // Empty string when the spec has no Nature player.
  std::string NatureId() const;
  std::vector<std::string> RegularPlayers() const;
  const ActionSpace& SpaceOf(const std::string& player) const;
};

// Every invariant violation, each with a JSON-pointer-style location into
// the config representation of the spec. Empty when valid.
std::vector<Diagnostic> CheckGame(const GameSpec& spec);
// Throws ConfigError carrying CheckGame's diagnostics.
void ValidateGame(const GameSpec& spec);

enum class ActivityKind { kGame, kSetting };

std::string_view ActivityKindName(ActivityKind kind);

// A game needs at least one positive and one negative verdict; anything
// else is a setting.
ActivityKind ClassifyActivity(const EvaluationRule& rule);
ActivityKind ClassifyActivity(const GameSpec& spec);

// Verdict recorded when a run reaches its step cap without an outcome.
std::string TimeoutVerdict(const GameSpec& spec);

// Hex digest identifying the game by name and description.
std::string GameDigest(const GameSpec& spec);

}  // namespace langgames

#endif  // LANGGAMES_GAMES_GAME_H_
