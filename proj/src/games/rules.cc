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

#include "langgames/games/rules.h"

#include <algorithm>

#include "langgames/core/errors.h"

namespace langgames {

ObservabilityRule ObservabilityRule::AllObserve(
    const std::vector<Player>& players,
    const std::map<std::string, ActionSpace>& spaces) {
  PlayerSet everyone;
  for (const Player& p : players) everyone.insert(p.id);
  std::map<PlayerKind, PlayerSet> entries;
  for (const auto& [owner, space] : spaces) {
    for (const ActionKind& kind : space.kinds()) {
      entries[{owner, kind.kind}] = everyone;
    }
  }
  return ObservabilityRule(std::move(entries), false);
}

ObservabilityRule ObservabilityRule::WithDeviantEntry(
    const std::string& player, const std::string& kind,
    PlayerSet observers) const {
  ObservabilityRule out = *this;
  out.entries_[{player, kind}] = std::move(observers);
  out.deviant_ = true;
  return out;
}

const PlayerSet& ObserversOf(const ObservabilityRule& rule,
                             const std::string& originator,
                             const std::string& kind) {
  auto it = rule.entries().find({originator, kind});
  if (it == rule.entries().end()) {
    throw ConfigError("observability rule has no entry for (" + originator +
                      ", " + kind + ")");
  }
  return it->second;
}

TurnRule TurnRule::FreeInitiative(std::vector<std::string> players) {
  TurnRule rule;
  rule.type_ = Type::kFreeInitiative;
  rule.start_ = PlayerSet(players.begin(), players.end());
  rule.order_ = std::move(players);
  return rule;
}

TurnRule TurnRule::StrictAlternation(std::vector<std::string> order,
                                     std::string first) {
  TurnRule rule;
  rule.type_ = Type::kStrictAlternation;
  rule.start_ = {std::move(first)};
  rule.order_ = std::move(order);
  return rule;
}

TurnRule TurnRule::Table(PlayerSet start,
                         std::map<PlayerKind, PlayerSet> next) {
  TurnRule rule;
  rule.type_ = Type::kTable;
  rule.start_ = std::move(start);
  rule.table_ = std::move(next);
  return rule;
}

PlayerSet TurnRule::Next(const std::string& player,
                         const std::string& kind) const {
  switch (type_) {
    case Type::kFreeInitiative:
      return start_;
    case Type::kStrictAlternation: {
      auto it = std::find(order_.begin(), order_.end(), player);
      if (it == order_.end()) return {};
      ++it;
      if (it == order_.end()) it = order_.begin();
      return {*it};
    }
    case Type::kTable: {
      auto it = table_.find({player, kind});
      return it == table_.end() ? PlayerSet{} : it->second;
    }
  }
  return {};
}

PlayerSet TurnRule::Mentioned() const {
  PlayerSet out = start_;
  out.insert(order_.begin(), order_.end());
  for (const auto& [key, next] : table_) {
    out.insert(key.first);
    out.insert(next.begin(), next.end());
  }
  return out;
}

std::string_view TurnRuleTypeName(TurnRule::Type type) {
  switch (type) {
    case TurnRule::Type::kFreeInitiative:
      return "free_initiative";
    case TurnRule::Type::kStrictAlternation:
      return "strict_alternation";
    case TurnRule::Type::kTable:
      return "table";
  }
  return "table";
}

PlayerSet EligiblePlayers(const TurnRule& rule,
                          std::span<const ActionToken> history) {
  if (history.empty()) return rule.start();
  const ActionToken& last = history.back();
  return rule.Next(last.originator, last.action.kind);
}

std::string_view PolarityName(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPositive:
      return "positive";
    case Polarity::kNegative:
      return "negative";
    case Polarity::kNeutral:
      return "neutral";
  }
  return "neutral";
}

Polarity ParsePolarity(std::string_view name) {
  if (name == "positive") return Polarity::kPositive;
  if (name == "negative") return Polarity::kNegative;
  if (name == "neutral") return Polarity::kNeutral;
  throw InputError("polarity must be positive, negative or neutral; got '" +
                   std::string(name) + "'");
}

std::optional<Polarity> EvaluationRule::PolarityOf(
    std::string_view verdict) const {
  for (const VerdictDecl& v : verdicts) {
    if (v.name == verdict) return v.polarity;
  }
  return std::nullopt;
}

bool EvaluationRule::Decisive(std::string_view verdict) const {
  auto polarity = PolarityOf(verdict);
  return polarity && *polarity != Polarity::kNeutral;
}

bool EvaluationRule::HasPolarity(Polarity polarity) const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [&](const VerdictDecl& v) { return v.polarity == polarity; });
}

std::string EvaluateHistory(const EvaluationRule& rule,
                            std::span<const ActionToken> history) {
  if (history.empty()) return rule.neutral;
  if (!rule.evaluate) throw InternalError("evaluation rule has no evaluator");
  std::string verdict = rule.evaluate(history);
  if (!rule.PolarityOf(verdict)) {
    throw InternalError("evaluator returned '" + verdict +
                        "', which is not a declared verdict");
  }
  return verdict;
}

EvaluationRule ConstantEvaluation(const std::string& verdict) {
  EvaluationRule rule;
  rule.verdicts = {{verdict, Polarity::kNeutral}};
  rule.neutral = verdict;
  rule.timeout = verdict;
  rule.evaluate = [verdict](std::span<const ActionToken>) { return verdict; };
  rule.descriptor = {{"type", "constant"}, {"verdict", verdict}};
  return rule;
}

std::vector<VerdictDecl> StandardVerdicts() {
  return {{"success", Polarity::kPositive},
          {"failure", Polarity::kNegative},
          {"undecided", Polarity::kNeutral}};
}

}  // namespace langgames
