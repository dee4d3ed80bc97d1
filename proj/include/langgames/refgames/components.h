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

#ifndef LANGGAMES_REFGAMES_COMPONENTS_H_
#define LANGGAMES_REFGAMES_COMPONENTS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "langgames/core/action.h"
#include "langgames/games/game.h"
#include "langgames/worlds/environment.h"

// Named building blocks that games are assembled from. Each one is rebuilt
// from a small JSON descriptor, which is what lets game specs round-trip
// through config files.

namespace langgames {

// Payload grammars: "utterance" (any string), "nav-options" (canonically
// ordered list of distinct directions), "grid-question", "grid-scene"
// ({"agent": cell, "goal": cell}). Throws NotFoundError.
PayloadSchema GrammarSchema(std::string_view name);
std::vector<std::string> GrammarNames();

// {"enum": [...]} or {"grammar": name}. Throws ConstructionError.
PayloadSchema SchemaFromJson(const nlohmann::json& json);
nlohmann::json SchemaToJson(const PayloadSchema& schema);

// Environments: {"type": "gridworld", <layout>} and
// {"type": "grid-scene", "width", "height", "agent", "goal"}, a static scene
// that accepts no actions. Throws ConstructionError / NotFoundError.
EnvironmentSpec MakeEnvironment(const nlohmann::json& descriptor);
EnvironmentSpec MakeGridScene(int width, int height, const nlohmann::json& agent,
                              const nlohmann::json& goal);

// Nature policies: {"type": "inert"}, {"type": "gridworld-options"} (inform
// the available moves after every turn), {"type": "announce-scene"} (inform
// the scene once). Throws NotFoundError.
NaturePolicy MakeNaturePolicy(const nlohmann::json& descriptor);

// Evaluation rules. `descriptor` is the "rule" part:
//   {"type": "constant", "verdict": v}
//   {"type": "gridworld-goal"}: positive once the agent is on the goal and
//       the move has been reported back, neutral before that
//   {"type": "qa-oracle", "asker": id, "answerer": id}: decided by the
//       answer to the most recent question
// Optional "positive", "negative" and "neutral" keys rename the verdicts
// (defaults success, failure, undecided). Evaluators that replay the
// environment need `env`. Throws ConstructionError / NotFoundError.
Evaluator MakeEvaluator(const nlohmann::json& descriptor,
                        const std::optional<EnvironmentSpec>& env);

EvaluationRule MakeEvaluationRule(std::vector<VerdictDecl> verdicts,
                                  std::string neutral, std::string timeout,
                                  const nlohmann::json& descriptor,
                                  const std::optional<EnvironmentSpec>& env);

}  // namespace langgames

#endif  // LANGGAMES_REFGAMES_COMPONENTS_H_
