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

#include "langgames/games/game.h"

#include <set>

#include "langgames/core/random.h"

namespace langgames {

NaturePolicy InertNature() {
  NaturePolicy nature;
  nature.respond = [](const State&, std::span<const ActionToken>) {
    return std::optional<Action>();
  };
  nature.descriptor = {{"type", "inert"}};
  return nature;
}

const Player* GameSpec::FindPlayer(std::string_view id) const {
  for (const Player& p : players) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::string GameSpec::NatureId() const {
  for (const Player& p : players) {
    if (p.role == PlayerRole::kNature) return p.id;
  }
  return "";
}

std::vector<std::string> GameSpec::RegularPlayers() const {
  std::vector<std::string> out;
  for (const Player& p : players) {
    if (p.role == PlayerRole::kRegular) out.push_back(p.id);
  }
  return out;
}

const ActionSpace& GameSpec::SpaceOf(const std::string& player) const {
  auto it = spaces.find(player);
  if (it == spaces.end()) {
    throw ConfigError("no action space for player '" + player + "'");
  }
  return it->second;
}

std::vector<Diagnostic> CheckGame(const GameSpec& spec) {
  std::vector<Diagnostic> out;
  auto report = [&out](std::string pointer, std::string message) {
    out.push_back({std::move(pointer), std::move(message), 0, 0});
  };

  // Players.
  if (spec.players.empty()) report("/players", "game declares no players");
  std::set<std::string> ids;
  int natures = 0;
  for (std::size_t i = 0; i < spec.players.size(); ++i) {
    const Player& p = spec.players[i];
    const std::string at = "/players/" + std::to_string(i);
    if (p.id.empty()) report(at + "/id", "player id is empty");
    if (!ids.insert(p.id).second) {
      report(at + "/id", "player id '" + p.id + "' is not unique");
    }
    if (p.role == PlayerRole::kNature) ++natures;
  }
  if (natures == 0) report("/players", "game has no Nature player");
  if (natures > 1) {
    report("/players", "game declares " + std::to_string(natures) +
                           " Nature players; exactly one is allowed");
  }
  if (!spec.players.empty() && spec.RegularPlayers().empty()) {
    report("/players", "game has no regular player");
  }
  const std::string nature = spec.NatureId();

  // Action spaces.
  for (const auto& [owner, space] : spec.spaces) {
    if (!ids.count(owner)) {
      report("/spaces/" + owner, "action space for unknown player '" + owner +
                                     "'");
    }
    if (space.owner() != owner) {
      report("/spaces/" + owner, "space owner '" + space.owner() +
                                     "' does not match key");
    }
  }
  for (const Player& p : spec.players) {
    if (!spec.spaces.count(p.id)) {
      report("/spaces", "player '" + p.id + "' has no action space");
    }
  }

  // Observability.
  const auto& entries = spec.observability.entries();
  for (const auto& [key, observers] : entries) {
    const auto& [player, kind] = key;
    const std::string at = "/observability/" + player + "/" + kind;
    if (!ids.count(player)) {
      report(at, "observability rule references unknown player '" + player +
                     "'");
      continue;
    }
    auto space = spec.spaces.find(player);
    if (space != spec.spaces.end() && space->second.Find(kind) == nullptr) {
      report(at, "observability rule references unknown action kind '" +
                     kind + "' of player '" + player + "'");
    }
    for (const std::string& o : observers) {
      if (!ids.count(o)) {
        report(at, "observability rule references unknown player '" + o +
                       "'");
      }
    }
    if (!spec.observability.deviant()) {
      if (!observers.count(player)) {
        report(at, "originator '" + player +
                       "' cannot observe its own action; declare the rule "
                       "deviant to allow this");
      }
      if (!nature.empty() && !observers.count(nature)) {
        report(at, "Nature cannot observe this action; declare the rule "
                   "deviant to allow this");
      }
    }
  }
  for (const auto& [owner, space] : spec.spaces) {
    for (const ActionKind& kind : space.kinds()) {
      if (!entries.count({owner, kind.kind})) {
        report("/observability", "no observers declared for (" + owner +
                                     ", " + kind.kind + ")");
      }
    }
  }

  // Turn taking.
  const TurnRule& turn = spec.turn;
  if (turn.start().empty()) {
    report("/turn/start", "turn rule must name at least one starting player");
  }
  for (const std::string& p : turn.Mentioned()) {
    if (!ids.count(p)) {
      report("/turn", "turn rule references unknown player '" + p + "'");
    }
  }
  if (turn.type() == TurnRule::Type::kStrictAlternation) {
    for (const std::string& p : turn.start()) {
      bool listed = false;
      for (const std::string& o : turn.order()) listed = listed || o == p;
      if (!listed) {
        report("/turn/start", "starting player '" + p +
                                  "' is not in the alternation order");
      }
    }
  }
  for (const auto& [key, next] : turn.table()) {
    auto space = spec.spaces.find(key.first);
    if (space != spec.spaces.end() && space->second.Find(key.second) == nullptr) {
      report("/turn/next", "turn rule references unknown action kind '" +
                               key.second + "' of player '" + key.first + "'");
    }
  }

  // Evaluation.
  const EvaluationRule& eval = spec.evaluation;
  std::set<std::string> verdicts;
  for (const VerdictDecl& v : eval.verdicts) {
    if (v.name.empty()) report("/evaluation/verdicts", "empty verdict name");
    if (!verdicts.insert(v.name).second) {
      report("/evaluation/verdicts", "verdict '" + v.name + "' declared twice");
    }
  }
  if (eval.verdicts.empty()) {
    report("/evaluation/verdicts", "evaluation declares no verdicts");
  }
  auto neutral = eval.PolarityOf(eval.neutral);
  if (!neutral) {
    report("/evaluation/neutral", "neutral verdict '" + eval.neutral +
                                      "' is not declared");
  } else if (*neutral != Polarity::kNeutral) {
    report("/evaluation/neutral", "verdict '" + eval.neutral +
                                      "' must have neutral polarity");
  }
  if (!eval.PolarityOf(eval.timeout)) {
    report("/evaluation/timeout", "timeout verdict '" + eval.timeout +
                                      "' is not declared");
  }
  if (!eval.evaluate) report("/evaluation/rule", "evaluation has no rule");

  if (!spec.nature.respond) report("/nature", "Nature has no policy");
  if (spec.default_max_steps < 1) {
    report("/default_max_steps", "default step cap must be at least 1");
  }
  return out;
}

void ValidateGame(const GameSpec& spec) {
  std::vector<Diagnostic> problems = CheckGame(spec);
  if (!problems.empty()) throw ConfigError(std::move(problems));
}

std::string_view ActivityKindName(ActivityKind kind) {
  return kind == ActivityKind::kGame ? "game" : "setting";
}

ActivityKind ClassifyActivity(const EvaluationRule& rule) {
  return rule.HasPolarity(Polarity::kPositive) &&
                 rule.HasPolarity(Polarity::kNegative)
             ? ActivityKind::kGame
             : ActivityKind::kSetting;
}

ActivityKind ClassifyActivity(const GameSpec& spec) {
  return ClassifyActivity(spec.evaluation);
}

std::string TimeoutVerdict(const GameSpec& spec) {
  return ClassifyActivity(spec) == ActivityKind::kGame
             ? spec.evaluation.timeout
             : spec.evaluation.neutral;
}

std::string GameDigest(const GameSpec& spec) {
  // Everything that shapes a run, in a fixed order. Component behaviour is
  // captured through its descriptor.
  nlohmann::ordered_json doc;
  doc["name"] = spec.name;
  doc["description"] = spec.description;
  for (const Player& p : spec.players) {
    doc["players"].push_back({p.id, PlayerRoleName(p.role)});
  }
  for (const auto& [player, space] : spec.spaces) {
    nlohmann::ordered_json kinds = nlohmann::ordered_json::object();
    for (const ActionKind& k : space.kinds()) {
      kinds[k.kind] = k.schema.enumerable()
                          ? nlohmann::ordered_json(k.schema.values())
                          : nlohmann::ordered_json(k.schema.grammar_name());
    }
    doc["spaces"][player] = kinds;
  }
  for (const auto& [key, observers] : spec.observability.entries()) {
    doc["observability"].push_back({key.first, key.second, observers});
  }
  doc["deviant"] = spec.observability.deviant();
  doc["turn"] = {TurnRuleTypeName(spec.turn.type()), spec.turn.start(),
                 spec.turn.order()};
  for (const auto& [key, next] : spec.turn.table()) {
    doc["turn"].push_back({key.first, key.second, next});
  }
  for (const VerdictDecl& v : spec.evaluation.verdicts) {
    doc["verdicts"].push_back({v.name, PolarityName(v.polarity)});
  }
  doc["neutral"] = spec.evaluation.neutral;
  doc["timeout"] = spec.evaluation.timeout;
  doc["evaluation"] = spec.evaluation.descriptor;
  doc["environment"] = spec.environment ? spec.environment->descriptor
                                        : nlohmann::json();
  doc["nature"] = spec.nature.descriptor;
  return HexDigest(doc.dump());
}

}  // namespace langgames
