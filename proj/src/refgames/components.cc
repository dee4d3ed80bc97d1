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

#include "langgames/refgames/components.h"

#include <set>

#include "langgames/core/errors.h"
#include "langgames/tasks/builtin_tasks.h"
#include "langgames/worlds/gridworld.h"

namespace langgames {
namespace {

bool IsNavOptions(const Payload& payload) {
  if (!payload.is_array()) return false;
  int previous = -1;
  for (const auto& item : payload) {
    if (!item.is_string()) return false;
    auto d = ParseDirection(item.get<std::string>());
    if (!d) return false;
    const int rank = static_cast<int>(*d);
    if (rank <= previous) return false;  // canonical order, no repeats
    previous = rank;
  }
  return true;
}

bool IsCell(const nlohmann::json& json) {
  return json.is_array() && json.size() == 2 && json[0].is_number_integer() &&
         json[1].is_number_integer();
}

bool IsGridScene(const Payload& payload) {
  return payload.is_object() && payload.size() == 2 &&
         payload.contains("agent") && payload.contains("goal") &&
         IsCell(payload["agent"]) && IsCell(payload["goal"]);
}

std::string StringField(const nlohmann::json& json, const char* key,
                        const std::string& fallback) {
  if (!json.contains(key)) return fallback;
  if (!json[key].is_string()) {
    throw ConstructionError(std::string("\"") + key + "\" must be a string");
  }
  return json[key].get<std::string>();
}

std::string RequireType(const nlohmann::json& descriptor, const char* what) {
  if (!descriptor.is_object() || !descriptor.contains("type") ||
      !descriptor["type"].is_string()) {
    throw ConstructionError(std::string(what) + " needs a \"type\" string");
  }
  return descriptor["type"].get<std::string>();
}

Evaluator GridworldGoalEvaluator(const EnvironmentSpec& env,
                                 std::string positive, std::string neutral) {
  return [env, positive,
          neutral](std::span<const ActionToken> history) -> std::string {
    State state = env.initial_state;
    for (const ActionToken& token : history) {
      if (env.Accepts(token.action)) {
        state = env.step(state, token.action).state;
      }
    }
    const GridworldState grid = GridStateFromJson(state);
    // The outcome counts once the last move has been reported back.
    const bool reported = !env.Accepts(history.back().action);
    return grid.agent == grid.goal && reported ? positive : neutral;
  };
}

Evaluator QaOracleEvaluator(const EnvironmentSpec& env, std::string asker,
                            std::string answerer, std::string positive,
                            std::string negative, std::string neutral) {
  const GridworldState scene = GridStateFromJson(env.initial_state);
  return [=](std::span<const ActionToken> history) -> std::string {
    const ActionToken& last = history.back();
    if (last.originator != answerer) return neutral;
    const ActionToken* question = nullptr;
    for (auto it = history.rbegin() + 1; it != history.rend(); ++it) {
      if (it->originator == asker) {
        question = &*it;
        break;
      }
    }
    if (question == nullptr || !question->action.payload.is_string()) {
      return neutral;
    }
    const std::string expected = AnswerGridQuestion(
        scene.agent.col, scene.agent.row, scene.goal.col, scene.goal.row,
        question->action.payload.get<std::string>());
    return last.action.payload == expected ? positive : negative;
  };
}

}  // namespace

PayloadSchema GrammarSchema(std::string_view name) {
  if (name == "utterance") return UtteranceSchema();
  if (name == "nav-options") {
    return PayloadSchema::Grammar("nav-options", IsNavOptions);
  }
  if (name == "grid-question") {
    return PayloadSchema::Grammar("grid-question", [](const Payload& p) {
      return p.is_string() &&
             GridQuestionDirection(p.get<std::string>()).has_value();
    });
  }
  if (name == "grid-scene") {
    return PayloadSchema::Grammar("grid-scene", IsGridScene);
  }
  throw NotFoundError("no payload grammar named '" + std::string(name) + "'");
}

std::vector<std::string> GrammarNames() {
  return {"grid-question", "grid-scene", "nav-options", "utterance"};
}

PayloadSchema SchemaFromJson(const nlohmann::json& json) {
  if (json.is_object() && json.contains("enum") && json["enum"].is_array()) {
    return PayloadSchema::Enumerated(
        json["enum"].get<std::vector<nlohmann::json>>());
  }
  if (json.is_object() && json.contains("grammar") &&
      json["grammar"].is_string()) {
    try {
      return GrammarSchema(json["grammar"].get<std::string>());
    } catch (const NotFoundError& e) {
      throw ConstructionError(e.what());
    }
  }
  throw ConstructionError(
      "payload schema must be {\"enum\": [...]} or {\"grammar\": name}");
}

nlohmann::json SchemaToJson(const PayloadSchema& schema) {
  if (schema.enumerable()) return {{"enum", schema.values()}};
  return {{"grammar", schema.grammar_name()}};
}

EnvironmentSpec MakeGridScene(int width, int height, const nlohmann::json& agent,
                              const nlohmann::json& goal) {
  GridworldState scene;
  scene.width = width;
  scene.height = height;
  try {
    scene.agent = CellFromJson(agent);
    scene.goal = CellFromJson(goal);
  } catch (const InputError& e) {
    throw ConstructionError(e.what());
  }
  if (width < 1 || height < 1 || !scene.InBounds(scene.agent) ||
      !scene.InBounds(scene.goal)) {
    throw ConstructionError("grid scene cells must lie inside a positive grid");
  }
  EnvironmentSpec env;
  env.name = "grid-scene";
  env.description = "A fixed grid with an agent cell and a goal cell.";
  env.actions = ActionSpace("environment", {});
  env.check_state = [](const State& state) -> std::optional<std::string> {
    try {
      GridStateFromJson(state);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::nullopt;
  };
  env.step = [](const State& state, const Action&) {
    return StepResult{state, 0.0};
  };
  env.initial_state = GridStateToJson(scene);
  env.descriptor = {{"type", "grid-scene"},
                    {"width", width},
                    {"height", height},
                    {"agent", CellToJson(scene.agent)},
                    {"goal", CellToJson(scene.goal)}};
  return env;
}

EnvironmentSpec MakeEnvironment(const nlohmann::json& descriptor) {
  const std::string type = RequireType(descriptor, "environment");
  if (type == "gridworld") return MakeGridworld(LayoutFromJson(descriptor));
  if (type == "grid-scene") {
    try {
      return MakeGridScene(descriptor.at("width").get<int>(),
                           descriptor.at("height").get<int>(),
                           descriptor.at("agent"), descriptor.at("goal"));
    } catch (const nlohmann::json::exception& e) {
      throw ConstructionError(std::string("bad grid scene: ") + e.what());
    }
  }
  throw NotFoundError("no environment type '" + type + "'");
}

NaturePolicy MakeNaturePolicy(const nlohmann::json& descriptor) {
  const std::string type = RequireType(descriptor, "nature policy");
  if (type == "inert") return InertNature();
  NaturePolicy nature;
  nature.descriptor = {{"type", type}};
  if (type == "gridworld-options") {
    nature.respond = [](const State& state, std::span<const ActionToken>) {
      return std::optional<Action>(Action{
          "inform", OptionsPayload(GridworldOptions(GridStateFromJson(state)))});
    };
    return nature;
  }
  if (type == "announce-scene") {
    nature.respond = [](const State& state,
                        std::span<const ActionToken> observed) {
      for (const ActionToken& t : observed) {
        if (t.action.kind == "inform") return std::optional<Action>();
      }
      const GridworldState scene = GridStateFromJson(state);
      return std::optional<Action>(
          Action{"inform",
                 {{"agent", CellToJson(scene.agent)},
                  {"goal", CellToJson(scene.goal)}}});
    };
    return nature;
  }
  throw NotFoundError("no Nature policy type '" + type + "'");
}

Evaluator MakeEvaluator(const nlohmann::json& descriptor,
                        const std::optional<EnvironmentSpec>& env) {
  const std::string type = RequireType(descriptor, "evaluation rule");
  if (type == "constant") {
    const std::string verdict = StringField(descriptor, "verdict", "undecided");
    return [verdict](std::span<const ActionToken>) { return verdict; };
  }
  const std::string positive = StringField(descriptor, "positive", "success");
  const std::string negative = StringField(descriptor, "negative", "failure");
  const std::string neutral = StringField(descriptor, "neutral", "undecided");
  if (type == "gridworld-goal") {
    if (!env || env->descriptor.value("type", "") != "gridworld") {
      throw ConstructionError("gridworld-goal evaluation needs a gridworld");
    }
    return GridworldGoalEvaluator(*env, positive, neutral);
  }
  if (type == "qa-oracle") {
    if (!env || env->descriptor.value("type", "") != "grid-scene") {
      throw ConstructionError("qa-oracle evaluation needs a grid-scene");
    }
    return QaOracleEvaluator(*env, StringField(descriptor, "asker", "asker"),
                             StringField(descriptor, "answerer", "answerer"),
                             positive, negative, neutral);
  }
  throw NotFoundError("no evaluation rule type '" + type + "'");
}

EvaluationRule MakeEvaluationRule(std::vector<VerdictDecl> verdicts,
                                  std::string neutral, std::string timeout,
                                  const nlohmann::json& descriptor,
                                  const std::optional<EnvironmentSpec>& env) {
  EvaluationRule rule;
  rule.verdicts = std::move(verdicts);
  rule.neutral = std::move(neutral);
  rule.timeout = std::move(timeout);
  rule.evaluate = MakeEvaluator(descriptor, env);
  rule.descriptor = descriptor;
  return rule;
}

}  // namespace langgames
