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

#ifndef LANGGAMES_DIAGNOSTICS_CAPABILITIES_H_
#define LANGGAMES_DIAGNOSTICS_CAPABILITIES_H_

#include <map>
#include <optional>
#include <set>
#include <string>

#include "json.hpp"

namespace langgames {

// Claims a task author makes about its capability set. They are recorded
// and echoed, never checked.
struct CapabilityClaims {
  std::optional<bool> separability;
  std::string separability_note;
  std::map<std::string, bool> exhaustivity;  // per capability tag
  std::string exhaustivity_note;

  bool operator==(const CapabilityClaims&) const = default;
};

enum class CapabilityRole { kTask, kInventory };

// Tag -> prose definition. A task set names the inventory it draws from and
// must be a subset of it; an inventory is its own parent.
struct CapabilitySet {
  std::string name;
  CapabilityRole role = CapabilityRole::kTask;
  std::map<std::string, std::string> capabilities;
  CapabilityClaims claims;
};

struct ResolvedCapabilities {
  CapabilitySet set;
  CapabilitySet inventory;
};

struct CapabilityComparison {
  std::string inventory;
  std::set<std::string> shared;   // a ∩ b
  std::set<std::string> added;    // b \ a
  std::set<std::string> dropped;  // a \ b
  double coverage_a = 0.0;        // |a| / |inventory|
  double coverage_b = 0.0;
  CapabilityClaims claims_a;
  CapabilityClaims claims_b;
};

// Throws InputError when the inventories differ (by name or tags), when
// either set is not a subset of its inventory, or the inventory is empty.
CapabilityComparison CompareCapabilities(const ResolvedCapabilities& a,
                                         const ResolvedCapabilities& b);

// Task file:
//   {"kind": "capabilities", "name": .., "role": "task",
//    "inventory": {"name": .., "capabilities": {tag: definition}},
//    "capabilities": {tag: definition},
//    "claims": {"separability": bool, "separability_note": ..,
//               "exhaustivity": {tag: bool}, "exhaustivity_note": ..}}
// Inventory file: same without "inventory"/"claims", role "inventory".
// Throws InputError.
ResolvedCapabilities CapabilitiesFromJson(const nlohmann::json& json);

nlohmann::ordered_json ComparisonToJson(const CapabilityComparison& c);
std::string FormatComparison(const CapabilityComparison& c);

}  // namespace langgames

#endif  // LANGGAMES_DIAGNOSTICS_CAPABILITIES_H_
