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

#include "langgames/diagnostics/capabilities.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "langgames/core/errors.h"

namespace langgames {
namespace {

std::map<std::string, std::string> TagMap(const nlohmann::json& json,
                                          const std::string& where) {
  if (!json.is_object()) {
    throw InputError(where + " must map capability tags to definitions");
  }
  std::map<std::string, std::string> out;
  for (const auto& [tag, definition] : json.items()) {
    if (tag.empty()) throw InputError(where + " has an empty tag");
    if (!definition.is_string()) {
      throw InputError(where + ": definition of '" + tag +
                       "' must be a string");
    }
    out[tag] = definition.get<std::string>();
  }
  return out;
}

std::string NameOf(const nlohmann::json& json, const std::string& where) {
  if (!json.contains("name") || !json["name"].is_string() ||
      json["name"].get<std::string>().empty()) {
    throw InputError(where + " needs a non-empty \"name\"");
  }
  return json["name"].get<std::string>();
}

std::set<std::string> Tags(const CapabilitySet& set) {
  std::set<std::string> out;
  for (const auto& [tag, definition] : set.capabilities) out.insert(tag);
  return out;
}

void CheckSubset(const CapabilitySet& set, const CapabilitySet& inventory) {
  for (const auto& [tag, definition] : set.capabilities) {
    if (!inventory.capabilities.count(tag)) {
      throw InputError("capability '" + tag + "' of '" + set.name +
                       "' is not in inventory '" + inventory.name + "'");
    }
  }
}

nlohmann::ordered_json ClaimsToJson(const CapabilityClaims& claims) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  if (claims.separability) out["separability"] = *claims.separability;
  if (!claims.separability_note.empty()) {
    out["separability_note"] = claims.separability_note;
  }
  if (!claims.exhaustivity.empty()) out["exhaustivity"] = claims.exhaustivity;
  if (!claims.exhaustivity_note.empty()) {
    out["exhaustivity_note"] = claims.exhaustivity_note;
  }
  return out;
}

std::string List(const std::set<std::string>& tags) {
  std::string out;
  for (const std::string& t : tags) out += (out.empty() ? "" : ", ") + t;
  return "{" + out + "}";
}

}  // namespace

CapabilityComparison CompareCapabilities(const ResolvedCapabilities& a,
                                         const ResolvedCapabilities& b) {
  if (a.inventory.name != b.inventory.name ||
      Tags(a.inventory) != Tags(b.inventory)) {
    throw InputError("capability sets reference different inventories ('" +
                     a.inventory.name + "' vs '" + b.inventory.name + "')");
  }
  if (a.inventory.capabilities.empty()) {
    throw InputError("inventory '" + a.inventory.name + "' is empty");
  }
  CheckSubset(a.set, a.inventory);
  CheckSubset(b.set, b.inventory);

  const std::set<std::string> ta = Tags(a.set);
  const std::set<std::string> tb = Tags(b.set);
  CapabilityComparison c;
  c.inventory = a.inventory.name;
  std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                        std::inserter(c.shared, c.shared.end()));
  std::set_difference(tb.begin(), tb.end(), ta.begin(), ta.end(),
                      std::inserter(c.added, c.added.end()));
  std::set_difference(ta.begin(), ta.end(), tb.begin(), tb.end(),
                      std::inserter(c.dropped, c.dropped.end()));
  const double total = static_cast<double>(a.inventory.capabilities.size());
  c.coverage_a = static_cast<double>(ta.size()) / total;
  c.coverage_b = static_cast<double>(tb.size()) / total;
  c.claims_a = a.set.claims;
  c.claims_b = b.set.claims;
  return c;
}

ResolvedCapabilities CapabilitiesFromJson(const nlohmann::json& json) {
  if (!json.is_object()) throw InputError("capability file must be an object");
  ResolvedCapabilities out;
  CapabilitySet& set = out.set;
  set.name = NameOf(json, "capability set");
  const std::string role = json.value("role", "task");
  if (role != "task" && role != "inventory") {
    throw InputError("capability role must be task or inventory");
  }
  set.role = role == "task" ? CapabilityRole::kTask : CapabilityRole::kInventory;
  if (!json.contains("capabilities")) {
    throw InputError("capability set '" + set.name +
                     "' needs \"capabilities\"");
  }
  set.capabilities = TagMap(json["capabilities"], "capabilities");

  if (set.role == CapabilityRole::kInventory) {
    out.inventory = set;
  } else {
    if (!json.contains("inventory") || !json["inventory"].is_object()) {
      throw InputError("task capability set '" + set.name +
                       "' must declare its parent \"inventory\"");
    }
    const nlohmann::json& inv = json["inventory"];
    out.inventory.name = NameOf(inv, "inventory");
    out.inventory.role = CapabilityRole::kInventory;
    if (!inv.contains("capabilities")) {
      throw InputError("inventory needs \"capabilities\"");
    }
    out.inventory.capabilities =
        TagMap(inv["capabilities"], "inventory capabilities");
    CheckSubset(set, out.inventory);
  }

  if (json.contains("claims")) {
    const nlohmann::json& claims = json["claims"];
    if (!claims.is_object()) throw InputError("\"claims\" must be an object");
    try {
      if (claims.contains("separability")) {
        set.claims.separability = claims["separability"].get<bool>();
      }
      set.claims.separability_note = claims.value("separability_note", "");
      if (claims.contains("exhaustivity")) {
        set.claims.exhaustivity =
            claims["exhaustivity"].get<std::map<std::string, bool>>();
      }
      set.claims.exhaustivity_note = claims.value("exhaustivity_note", "");
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("bad claims: ") + e.what());
    }
    for (const auto& [tag, claim] : set.claims.exhaustivity) {
      if (!set.capabilities.count(tag)) {
        throw InputError("exhaustivity claim for unknown capability '" + tag +
                         "'");
      }
    }
  }
  return out;
}

nlohmann::ordered_json ComparisonToJson(const CapabilityComparison& c) {
  nlohmann::ordered_json out;
  out["inventory"] = c.inventory;
  out["shared"] = c.shared;
  out["added"] = c.added;
  out["dropped"] = c.dropped;
  out["coverage_a"] = c.coverage_a;
  out["coverage_b"] = c.coverage_b;
  out["claims_a"] = ClaimsToJson(c.claims_a);
  out["claims_b"] = ClaimsToJson(c.claims_b);
  return out;
}

std::string FormatComparison(const CapabilityComparison& c) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "inventory   " << c.inventory << "\n"
      << "shared      " << List(c.shared) << "\n"
      << "added       " << List(c.added) << "\n"
      << "dropped     " << List(c.dropped) << "\n"
      << "coverage    a=" << c.coverage_a << "  b=" << c.coverage_b << "\n"
      << "claims (declared, not verified)\n"
      << "  a: " << ClaimsToJson(c.claims_a).dump() << "\n"
      << "  b: " << ClaimsToJson(c.claims_b).dump() << "\n";
  return out.str();
}

}  // namespace langgames
