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

#include "langgames/refgames/catalog.h"

#include <set>

#include "langgames/core/errors.h"
#include "langgames/refgames/components.h"
#include "langgames/tasks/builtin_tasks.h"
#include "langgames/worlds/gridworld.h"

namespace langgames {
namespace {

void CheckKeys(std::string_view game, const nlohmann::json& overrides,
               const std::set<std::string>& allowed) {
  if (!overrides.is_object()) {
    throw ConstructionError("overrides for '" + std::string(game) +
                            "' must be an object");
  }
  for (const auto& [key, value] : overrides.items()) {
    if (!allowed.count(key)) {
      throw ConstructionError("'" + std::string(game) +
                              "' has no override named '" + key + "'");
    }
  }
}

void ApplyCommonOverrides(GameSpec& spec, const nlohmann::json& overrides) {
  if (overrides.contains("max_steps")) {
    if (!overrides["max_steps"].is_number_integer()) {
      throw ConstructionError("\"max_steps\" must be an integer");
    }
    spec.default_max_steps = overrides["max_steps"].get<int>();
  }
  if (overrides.contains("timeout")) {
    if (!overrides["timeout"].is_string()) {
      throw ConstructionError("\"timeout\" must be a string");
    }
    spec.evaluation.timeout = overrides["timeout"].get<std::string>();
  }
  if (overrides.contains("observability")) {
    const nlohmann::json& obs = overrides["observability"];
    if (!obs.is_object() || !obs.contains("entries") ||
        !obs["entries"].is_array()) {
      throw ConstructionError(
          "\"observability\" override needs an \"entries\" array");
    }
    for (const auto& entry : obs["entries"]) {
      try {
        spec.observability = spec.observability.WithDeviantEntry(
            entry.at("player").get<std::string>(),
            entry.at("kind").get<std::string>(),
            entry.at("observers").get<PlayerSet>());
      } catch (const nlohmann::json::exception& e) {
        throw ConstructionError(std::string("bad observability entry: ") +
                                e.what());
      }
    }
  }
  try {
    ValidateGame(spec);
  } catch (const ConfigError& e) {
    throw ConstructionError(e.what());
  }
}

std::vector<Payload> NavPayloads() {
  std::vector<Payload> out;
  for (Direction d : kAllDirections) out.emplace_back(DirectionCode(d));
  return out;
}

GameSpec GridworldNav(const nlohmann::json& overrides) {
  CheckKeys("gridworld-nav", overrides,
            {"width", "height", "start", "goal", "walls", "map", "timeout",
             "max_steps", "observability"});
  nlohmann::json layout = {{"width", 4},
                           {"height", 4},
                           {"start", {0, 0}},
                           {"goal", {3, 3}},
                           {"walls", nlohmann::json::array()}};
  if (overrides.contains("map")) {
    layout = {{"map", overrides["map"]}};
  } else {
    for (const char* key : {"width", "height", "start", "goal", "walls"}) {
      if (overrides.contains(key)) layout[key] = overrides[key];
    }
  }

  GameSpec spec;
  spec.name = "gridworld-nav";
  spec.description =
      "Grid navigation: one agent moves through a grid while Nature reports "
      "which moves are available; reaching the goal cell is a success.";
  spec.players = {{"p1", PlayerRole::kRegular}, {"N", PlayerRole::kNature}};
  spec.spaces["p1"] =
      ActionSpace("p1", {{"nav", PayloadSchema::Enumerated(NavPayloads())}});
  spec.spaces["N"] =
      ActionSpace("N", {{"inform", GrammarSchema("nav-options")}});
  spec.observability = ObservabilityRule::AllObserve(spec.players, spec.spaces);
  spec.turn = TurnRule::StrictAlternation({"N", "p1"}, "N");
  nlohmann::json env_descriptor = layout;
  env_descriptor["type"] = "gridworld";
  spec.environment = MakeEnvironment(env_descriptor);
  spec.evaluation =
      MakeEvaluationRule(StandardVerdicts(), "undecided", "failure",
                         {{"type", "gridworld-goal"}}, spec.environment);
  spec.nature = MakeNaturePolicy({{"type", "gridworld-options"}});
  spec.default_max_steps = 100;
  ApplyCommonOverrides(spec, overrides);
  return spec;
}

GameSpec FreeChat(const nlohmann::json& overrides) {
  CheckKeys("free-chat", overrides, {"max_steps", "observability"});
  GameSpec spec;
  spec.name = "free-chat";
  spec.description =
      "Free chat: two players exchange utterances at will; Nature stays "
      "silent and nothing is ever decided.";
  spec.players = {{"p1", PlayerRole::kRegular},
                  {"p2", PlayerRole::kRegular},
                  {"N", PlayerRole::kNature}};
  spec.spaces["p1"] = ActionSpace("p1", {{"utt", UtteranceSchema()}});
  spec.spaces["p2"] = ActionSpace("p2", {{"utt", UtteranceSchema()}});
  spec.spaces["N"] = ActionSpace("N", {});
  spec.observability = ObservabilityRule::AllObserve(spec.players, spec.spaces);
  spec.turn = TurnRule::FreeInitiative({"p1", "p2"});
  spec.evaluation = ConstantEvaluation("undecided");
  spec.nature = InertNature();
  spec.default_max_steps = 20;
  ApplyCommonOverrides(spec, overrides);
  return spec;
}

GameSpec QaGame(const nlohmann::json& overrides) {
  CheckKeys("qa-game", overrides,
            {"width", "height", "agent", "goal", "timeout", "max_steps",
             "observability"});
  auto int_or = [&](const char* key, int fallback) {
    if (!overrides.contains(key)) return fallback;
    if (!overrides[key].is_number_integer()) {
      throw ConstructionError(std::string("\"") + key +
                              "\" must be an integer");
    }
    return overrides[key].get<int>();
  };

  GameSpec spec;
  spec.name = "qa-game";
  spec.description =
      "Question answering: Nature shows both players a grid scene, the asker "
      "asks where the goal lies relative to the agent, the answerer replies "
      "yes or no; a correct reply is a success.";
  spec.players = {{"asker", PlayerRole::kRegular},
                  {"answerer", PlayerRole::kRegular},
                  {"N", PlayerRole::kNature}};
  spec.spaces["asker"] =
      ActionSpace("asker", {{"utt", GrammarSchema("grid-question")}});
  spec.spaces["answerer"] = ActionSpace(
      "answerer", {{"utt", PayloadSchema::Enumerated({"yes", "no"})}});
  spec.spaces["N"] = ActionSpace("N", {{"inform", GrammarSchema("grid-scene")}});
  spec.observability = ObservabilityRule::AllObserve(spec.players, spec.spaces);
  spec.turn = TurnRule::StrictAlternation({"N", "asker", "answerer"}, "N");
  spec.environment = MakeGridScene(
      int_or("width", 4), int_or("height", 4),
      overrides.value("agent", nlohmann::json::array({0, 0})),
      overrides.value("goal", nlohmann::json::array({3, 3})));
  spec.evaluation = MakeEvaluationRule(
      StandardVerdicts(), "undecided", "failure",
      {{"type", "qa-oracle"}, {"asker", "asker"}, {"answerer", "answerer"}},
      spec.environment);
  spec.nature = MakeNaturePolicy({{"type", "announce-scene"}});
  spec.default_max_steps = 10;
  ApplyCommonOverrides(spec, overrides);
  return spec;
}

}  // namespace

GameSpec LoadBuiltin(std::string_view name, const nlohmann::json& overrides) {
  const nlohmann::json& o =
      overrides.is_null() ? nlohmann::json::object() : overrides;
  if (name == "gridworld-nav") return GridworldNav(o);
  if (name == "free-chat") return FreeChat(o);
  if (name == "qa-game") return QaGame(o);
  throw NotFoundError("no built-in game named '" + std::string(name) + "'");
}

std::vector<std::string> BuiltinGameNames() {
  return {"free-chat", "gridworld-nav", "qa-game"};
}

nlohmann::json DemoPolicyBindings(std::string_view name) {
  if (name == "gridworld-nav") return {{"p1", {{"type", "bfs"}}}};
  if (name == "free-chat") {
    return {{"p1",
             {{"type", "canned"},
              {"utterances",
               {"hello", "how are you?", "I don't know", "goodbye"}}}},
            {"p2",
             {{"type", "canned"},
              {"utterances", {"hi", "fine, thanks", "me neither"}}}}};
  }
  if (name == "qa-game") {
    return {{"asker", {{"type", "qa-asker"}}},
            {"answerer", {{"type", "qa-answerer"}, {"mode", "oracle"}}}};
  }
  throw NotFoundError("no built-in game named '" + std::string(name) + "'");
}

}  // namespace langgames
