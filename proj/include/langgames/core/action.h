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

#ifndef LANGGAMES_CORE_ACTION_H_
#define LANGGAMES_CORE_ACTION_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace langgames {

// Payloads are opaque JSON values: a direction string, an utterance, a list
// of navigation options, a scene object.
using Payload = nlohmann::json;

enum class PlayerRole { kRegular, kNature };

struct Player {
  std::string id;
  PlayerRole role = PlayerRole::kRegular;

  bool operator==(const Player&) const = default;
};

std::string_view PlayerRoleName(PlayerRole role);
PlayerRole ParsePlayerRole(std::string_view name);

// Describes the admissible payloads of one action kind. Either an explicit
// finite enumeration, or a named membership predicate (e.g. a grammar) that
// may accept infinitely many payloads. Only enumerations can be sampled.
class PayloadSchema {
 public:
  using Predicate = std::function<bool(const Payload&)>;

  PayloadSchema() = default;

  static PayloadSchema Enumerated(std::vector<Payload> values);
  static PayloadSchema Grammar(std::string name, Predicate accepts);

  bool Accepts(const Payload& payload) const;
  bool enumerable() const { return !accepts_; }

  // Throws UnsupportedError for grammar schemas.
  const std::vector<Payload>& values() const;
  // Empty for enumerations.
  const std::string& grammar_name() const { return grammar_; }

 private:
  std::vector<Payload> values_;
  std::string grammar_;
  Predicate accepts_;
};

struct ActionKind {
  std::string kind;
  PayloadSchema schema;
};

// A concrete candidate action: kind tag plus payload.
struct Action {
  std::string kind;
  Payload payload;

  bool operator==(const Action&) const = default;
};

// One occurrence of an action inside a transcript. `originator` and `seq`
// bind the occurrence to its player and to its position (1-based).
struct ActionToken {
  Action action;
  std::string originator;
  std::uint64_t seq = 0;

  bool operator==(const ActionToken&) const = default;
};

// The actions one player may choose from. Fixed for the lifetime of a game.
class ActionSpace {
 public:
  ActionSpace() = default;
  // Throws ConstructionError on duplicate kind tags.
  ActionSpace(std::string owner, std::vector<ActionKind> kinds);

  const std::string& owner() const { return owner_; }
  const std::vector<ActionKind>& kinds() const { return kinds_; }
  bool empty() const { return kinds_.empty(); }

  const ActionKind* Find(std::string_view kind) const;

 private:
  std::string owner_;
  std::vector<ActionKind> kinds_;
};

// True iff the candidate's kind belongs to the space and its payload
// satisfies that kind's schema. Throws InputError for a candidate with an
// empty kind or a null payload.
bool ActionInSpace(const ActionSpace& space, const Action& candidate);

// A schema accepting any string payload; the unrestricted utterance grammar.
PayloadSchema UtteranceSchema();

}  // namespace langgames

#endif  // LANGGAMES_CORE_ACTION_H_
