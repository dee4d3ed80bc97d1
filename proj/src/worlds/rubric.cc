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

#include "langgames/worlds/rubric.h"

#include "langgames/core/errors.h"

namespace langgames {

std::string_view RubricAnswerName(RubricAnswer answer) {
  switch (answer) {
    case RubricAnswer::kYes:
      return "yes";
    case RubricAnswer::kPartial:
      return "partial";
    case RubricAnswer::kNo:
      return "no";
  }
  return "no";
}

RubricAnswer ParseRubricAnswer(std::string_view name) {
  if (name == "yes") return RubricAnswer::kYes;
  if (name == "partial") return RubricAnswer::kPartial;
  if (name == "no") return RubricAnswer::kNo;
  throw InputError("rubric answer must be yes, partial or no; got '" +
                   std::string(name) + "'");
}

const std::vector<std::string>& RubricKeys() {
  static const std::vector<std::string> keys = {"C1", "C2", "C3", "C4",
                                                "C5", "C6", "C7", "C8"};
  return keys;
}

RubricReport ScoreRubric(const DesiderataRubric& rubric) {
  for (const auto& [key, entry] : rubric.criteria) {
    bool known = false;
    for (const std::string& k : RubricKeys()) known = known || k == key;
    if (!known) throw InputError("unknown rubric criterion '" + key + "'");
  }
  RubricReport report;
  double total = 0.0;
  for (const std::string& key : RubricKeys()) {
    auto it = rubric.criteria.find(key);
    if (it == rubric.criteria.end()) {
      throw InputError("rubric is missing criterion " + key);
    }
    if (it->second.answer == RubricAnswer::kYes) total += 1.0;
    if (it->second.answer == RubricAnswer::kPartial) total += 0.5;
    report.entries.emplace_back(key, it->second);
  }
  report.score = total / static_cast<double>(RubricKeys().size());
  return report;
}

DesiderataRubric RubricFromJson(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("criteria") ||
      !json["criteria"].is_object()) {
    throw InputError("rubric needs a \"criteria\" object");
  }
  DesiderataRubric rubric;
  for (const auto& [key, value] : json["criteria"].items()) {
    if (!value.is_object() || !value.contains("answer") ||
        !value["answer"].is_string()) {
      throw InputError("criterion " + key + " needs an \"answer\" string");
    }
    RubricEntry entry;
    entry.answer = ParseRubricAnswer(value["answer"].get<std::string>());
    if (value.contains("note")) {
      if (!value["note"].is_string()) {
        throw InputError("criterion " + key + " note must be a string");
      }
      entry.note = value["note"].get<std::string>();
    }
    rubric.criteria[key] = std::move(entry);
  }
  return rubric;
}

}  // namespace langgames
