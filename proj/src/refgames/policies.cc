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

#include "langgames/refgames/policies.h"

#include <memory>
#include <vector>

#include "langgames/core/random.h"
#include "langgames/tasks/builtin_tasks.h"
#include "langgames/worlds/gridworld.h"

namespace langgames {
namespace {

[[noreturn]] void Bad(const std::string& player, const std::string& what) {
  throw ConfigError(std::vector<Diagnostic>{
      {"/policies/" + player, what, 0, 0}});
}

Policy Scripted(const nlohmann::json& binding, const std::string& player) {
  std::vector<Action> script;
  if (binding.contains("actions")) {
    for (const auto& a : binding["actions"]) {
      if (!a.is_object() || !a.contains("kind") || !a["kind"].is_string() ||
          !a.contains("payload")) {
        Bad(player, "scripted actions need \"kind\" and \"payload\"");
      }
      script.push_back({a["kind"].get<std::string>(), a["payload"]});
    }
  } else if (binding.contains("kind") && binding.contains("payloads") &&
             binding["kind"].is_string() && binding["payloads"].is_array()) {
    for (const auto& p : binding["payloads"]) {
      script.push_back({binding["kind"].get<std::string>(), p});
    }
  } else {
    Bad(player, "scripted policy needs \"actions\" or \"kind\"/\"payloads\"");
  }
  if (script.empty()) Bad(player, "scripted policy has an empty script");
  const bool cycle = binding.value("cycle", false);
  auto next = std::make_shared<std::size_t>(0);
  return [script = std::move(script), cycle, next](const Observation&) {
    if (*next >= script.size()) {
      if (!cycle) throw InputError("script exhausted");
      *next = 0;
    }
    return script[(*next)++];
  };
}

Policy UniformRandom(const GameSpec& spec, const std::string& player,
                     std::uint64_t seed) {
  std::vector<Action> choices;
  for (const ActionKind& kind : spec.SpaceOf(player).kinds()) {
    if (!kind.schema.enumerable()) continue;
    for (const Payload& value : kind.schema.values()) {
      choices.push_back({kind.kind, value});
    }
  }
  if (choices.empty()) {
    Bad(player, "random policy needs an enumerable action space");
  }
  auto rng = std::make_shared<Rng>(seed);
  return [choices = std::move(choices), rng](const Observation&) {
    return choices[rng->Uniform(choices.size())];
  };
}

// Follows a shortest path to the goal. The layout is prior knowledge; the
// current position is dead-reckoned from the player's own observed moves.
Policy BreadthFirst(const GameSpec& spec, const std::string& player) {
  if (!spec.environment ||
      spec.environment->descriptor.value("type", "") != "gridworld") {
    Bad(player, "bfs policy needs a gridworld environment");
  }
  const GridworldState initial =
      GridStateFromJson(spec.environment->initial_state);
  const GridworldLayout layout{initial.width, initial.height, initial.agent,
                               initial.goal, initial.walls};
  return [initial, layout, player](const Observation& obs) {
    GridworldState at = initial;
    for (const ActionToken& t : obs.history) {
      if (t.originator != player || t.action.kind != "nav") continue;
      auto d = ParseDirection(t.action.payload.get<std::string>());
      if (d && at.Free(Neighbor(at.agent, *d))) at.agent = Neighbor(at.agent, *d);
    }
    auto path = ShortestPath(layout, at.agent);
    if (!path || path->empty()) {
      throw InputError("no move left towards the goal");
    }
    return Action{"nav", std::string(DirectionCode(path->front()))};
  };
}

Policy Canned(const nlohmann::json& binding, const std::string& player) {
  if (!binding.contains("utterances") || !binding["utterances"].is_array() ||
      binding["utterances"].empty()) {
    Bad(player, "canned policy needs a non-empty \"utterances\" list");
  }
  std::vector<Payload> lines = binding["utterances"];
  auto next = std::make_shared<std::size_t>(0);
  return [lines = std::move(lines), next](const Observation&) {
    Action a{"utt", lines[*next % lines.size()]};
    ++*next;
    return a;
  };
}

Policy QaAsker(const nlohmann::json& binding, const std::string& player,
               std::uint64_t seed) {
  std::vector<std::string> questions = GridQuestions();
  if (binding.contains("direction")) {
    const std::string d = binding["direction"].get<std::string>();
    const std::string q = "is the goal " + d + " of the agent?";
    if (!GridQuestionDirection(q)) Bad(player, "unknown direction '" + d + "'");
    questions = {q};
  }
  auto rng = std::make_shared<Rng>(seed);
  return [questions = std::move(questions), rng](const Observation&) {
    return Action{"utt", questions[rng->Uniform(questions.size())]};
  };
}

Policy QaAnswerer(const nlohmann::json& binding, const std::string& player,
                  std::uint64_t seed) {
  const std::string mode = binding.value("mode", "oracle");
  if (mode != "oracle" && mode != "random" && mode != "contrary") {
    Bad(player, "qa-answerer mode must be oracle, random or contrary");
  }
  auto rng = std::make_shared<Rng>(seed);
  return [mode, rng, player](const Observation& obs) {
    if (mode == "random") {
      return Action{"utt", rng->Uniform(2) == 0 ? "yes" : "no"};
    }
    const ActionToken* scene = nullptr;
    const ActionToken* question = nullptr;
    for (const ActionToken& t : obs.history) {
      if (t.action.kind == "inform" && t.action.payload.is_object()) scene = &t;
      if (t.originator != player && t.action.kind == "utt") question = &t;
    }
    if (scene == nullptr || question == nullptr) {
      throw InputError("answerer has not observed a scene and a question");
    }
    const auto& agent = scene->action.payload["agent"];
    const auto& goal = scene->action.payload["goal"];
    std::string answer = AnswerGridQuestion(
        agent[0].get<int>(), agent[1].get<int>(), goal[0].get<int>(),
        goal[1].get<int>(), question->action.payload.get<std::string>());
    if (mode == "contrary") answer = answer == "yes" ? "no" : "yes";
    return Action{"utt", answer};
  };
}

}  // namespace

Policy MakePolicy(const nlohmann::json& binding, const GameSpec& spec,
                  const std::string& player, std::uint64_t seed) {
  if (!binding.is_object() || !binding.contains("type") ||
      !binding["type"].is_string()) {
    Bad(player, "policy binding needs a \"type\" string");
  }
  const Player* p = spec.FindPlayer(player);
  if (p == nullptr || p->role != PlayerRole::kRegular) {
    Bad(player, "'" + player + "' is not a regular player of this game");
  }
  const std::string type = binding["type"].get<std::string>();
  try {
    if (type == "scripted") return Scripted(binding, player);
    if (type == "random") return UniformRandom(spec, player, seed);
    if (type == "bfs") return BreadthFirst(spec, player);
    if (type == "canned") return Canned(binding, player);
    if (type == "qa-asker") return QaAsker(binding, player, seed);
    if (type == "qa-answerer") return QaAnswerer(binding, player, seed);
  } catch (const nlohmann::json::exception& e) {
    Bad(player, std::string("bad policy binding: ") + e.what());
  }
  Bad(player, "unknown policy type '" + type + "'");
}

PolicyMap MakePolicies(const nlohmann::json& bindings, const GameSpec& spec,
                       std::uint64_t run_seed) {
  if (!bindings.is_object()) {
    throw ConfigError(std::vector<Diagnostic>{
        {"/policies", "policy bindings must be an object", 0, 0}});
  }
  PolicyMap policies;
  for (const auto& [player, binding] : bindings.items()) {
    policies[player] = MakePolicy(binding, spec, player,
                                  DeriveSeed(run_seed, "policy:" + player));
  }
  for (const std::string& p : spec.RegularPlayers()) {
    if (!policies.count(p)) {
      throw ConfigError(std::vector<Diagnostic>{
          {"/policies", "no policy bound to player '" + p + "'", 0, 0}});
    }
  }
  return policies;
}

}  // namespace langgames
