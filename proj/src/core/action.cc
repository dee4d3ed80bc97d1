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

#include "langgames/core/action.h"

#include <algorithm>
#include <set>

#include "langgames/core/errors.h"

namespace langgames {

std::string_view PlayerRoleName(PlayerRole role) {
  return role == PlayerRole::kNature ? "nature" : "regular";
}

PlayerRole ParsePlayerRole(std::string_view name) {
  if (name == "nature") return PlayerRole::kNature;
  if (name == "regular") return PlayerRole::kRegular;
  throw InputError("unknown player role '" + std::string(name) + "'");
}

PayloadSchema PayloadSchema::Enumerated(std::vector<Payload> values) {
  PayloadSchema schema;
  schema.values_ = std::move(values);
  return schema;
}

PayloadSchema PayloadSchema::Grammar(std::string name, Predicate accepts) {
  if (!accepts) throw ConstructionError("grammar schema needs a predicate");
  PayloadSchema schema;
  schema.grammar_ = std::move(name);
  schema.accepts_ = std::move(accepts);
  return schema;
}

bool PayloadSchema::Accepts(const Payload& payload) const {
  if (accepts_) return accepts_(payload);
  return std::find(values_.begin(), values_.end(), payload) != values_.end();
}

const std::vector<Payload>& PayloadSchema::values() const {
  if (!enumerable()) {
    throw UnsupportedError("schema '" + grammar_ + "' is not enumerable");
  }
  return values_;
}

ActionSpace::ActionSpace(std::string owner, std::vector<ActionKind> kinds)
    : owner_(std::move(owner)), kinds_(std::move(kinds)) {
  std::set<std::string> seen;
  for (const ActionKind& kind : kinds_) {
    if (kind.kind.empty()) {
      throw ConstructionError("action space of '" + owner_ +
                              "' has an empty kind tag");
    }
    if (!seen.insert(kind.kind).second) {
      throw ConstructionError("action space of '" + owner_ +
                              "' declares kind '" + kind.kind + "' twice");
    }
  }
}

const ActionKind* ActionSpace::Find(std::string_view kind) const {
  for (const ActionKind& k : kinds_) {
    if (k.kind == kind) return &k;
  }
  return nullptr;
}

bool ActionInSpace(const ActionSpace& space, const Action& candidate) {
  if (candidate.kind.empty()) throw InputError("candidate action has no kind");
  if (candidate.payload.is_null()) {
    throw InputError("candidate action '" + candidate.kind +
                     "' has no payload");
  }
  const ActionKind* kind = space.Find(candidate.kind);
  return kind != nullptr && kind->schema.Accepts(candidate.payload);
}

PayloadSchema UtteranceSchema() {
  return PayloadSchema::Grammar(
      "utterance", [](const Payload& payload) { return payload.is_string(); });
}

}  // namespace langgames
