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

#ifndef LANGGAMES_GAMES_RULES_H_
#define LANGGAMES_GAMES_RULES_H_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "langgames/core/action.h"

namespace langgames {

// (player id, action kind)
using PlayerKind = std::pair<std::string, std::string>;
using PlayerSet = std::set<std::string>;

// Who observes which kind of action by which player. Rules that are not
// flagged deviant must let every originator and Nature observe each entry.
class ObservabilityRule {
 public:
  ObservabilityRule() = default;
  ObservabilityRule(std::map<PlayerKind, PlayerSet> entries, bool deviant)
      : entries_(std::move(entries)), deviant_(deviant) {}

  // Every action of every player is observed by all players.
  static ObservabilityRule AllObserve(
      const std::vector<Player>& players,
      const std::map<std::string, ActionSpace>& spaces);

  const std::map<PlayerKind, PlayerSet>& entries() const { return entries_; }
  bool deviant() const { return deviant_; }

  // Returns a copy with one entry replaced; marks the rule deviant.
  ObservabilityRule WithDeviantEntry(const std::string& player,
                                     const std::string& kind,
                                     PlayerSet observers) const;

 private:
  std::map<PlayerKind, PlayerSet> entries_;
  bool deviant_ = false;
};

// The declared observer set. Undeclared (player, kind) pairs are rejected
// when a game is validated; reaching one here throws ConfigError.
const PlayerSet& ObserversOf(const ObservabilityRule& rule,
                             const std::string& originator,
                             const std::string& kind);

// Who may act next given who did what last, and who may start.
class TurnRule {
 public:
  enum class Type { kFreeInitiative, kStrictAlternation, kTable };

  TurnRule() = default;

  // All listed players may act at any time.
  static TurnRule FreeInitiative(std::vector<std::string> players);
  // Players act in the cyclic `order`, beginning with `first`; the player
  // who just acted is never eligible (for two or more players).
  static TurnRule StrictAlternation(std::vector<std::string> order,
                                    std::string first);
  // Explicit table; pairs without an entry map to the empty set.
  static TurnRule Table(PlayerSet start, std::map<PlayerKind, PlayerSet> next);

  Type type() const { return type_; }
  const PlayerSet& start() const { return start_; }
  const std::vector<std::string>& order() const { return order_; }
  const std::map<PlayerKind, PlayerSet>& table() const { return table_; }

  PlayerSet Next(const std::string& player, const std::string& kind) const;
  // Every player id the rule refers to.
  PlayerSet Mentioned() const;

 private:
  Type type_ = Type::kTable;
  PlayerSet start_;
  std::vector<std::string> order_;
  std::map<PlayerKind, PlayerSet> table_;
};

std::string_view TurnRuleTypeName(TurnRule::Type type);

// start set for an empty history, else Next(last originator, last kind).
PlayerSet EligiblePlayers(const TurnRule& rule,
                          std::span<const ActionToken> history);

enum class Polarity { kPositive, kNegative, kNeutral };

std::string_view PolarityName(Polarity polarity);
Polarity ParsePolarity(std::string_view name);

struct VerdictDecl {
  std::string name;
  Polarity polarity = Polarity::kNeutral;

  bool operator==(const VerdictDecl&) const = default;
};

using Evaluator = std::function<std::string(std::span<const ActionToken>)>;

// Maps token sequences into a declared, finite set of verdicts.
struct EvaluationRule {
  std::vector<VerdictDecl> verdicts;
  std::string neutral = "undecided";  // verdict of the empty history
  std::string timeout = "failure";    // verdict at the step cap (games only)
  Evaluator evaluate;
  // Rebuild recipe (config module); null when assembled in code.
  nlohmann::json descriptor;

  std::optional<Polarity> PolarityOf(std::string_view verdict) const;
  // Positive or negative: the outcome is made known and the run stops.
  bool Decisive(std::string_view verdict) const;
  bool HasPolarity(Polarity polarity) const;
};

// The empty history evaluates to `neutral` without invoking the evaluator.
// Throws InternalError when the evaluator returns a value outside V.
std::string EvaluateHistory(const EvaluationRule& rule,
                            std::span<const ActionToken> history);

// V = {verdict} (neutral); every history maps to it.
EvaluationRule ConstantEvaluation(const std::string& verdict = "undecided");

// {success +, failure -, undecided 0}
std::vector<VerdictDecl> StandardVerdicts();

}  // namespace langgames

#endif  // LANGGAMES_GAMES_RULES_H_
