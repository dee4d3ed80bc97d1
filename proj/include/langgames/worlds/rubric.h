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

#ifndef LANGGAMES_WORLDS_RUBRIC_H_
#define LANGGAMES_WORLDS_RUBRIC_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace langgames {

enum class RubricAnswer { kYes, kPartial, kNo };

std::string_view RubricAnswerName(RubricAnswer answer);
RubricAnswer ParseRubricAnswer(std::string_view name);

struct RubricEntry {
  RubricAnswer answer = RubricAnswer::kNo;
  std::string note;
};

// Human judgments on the eight environment desiderata, keyed "C1".."C8".
struct DesiderataRubric {
  std::map<std::string, RubricEntry> criteria;
};

struct RubricReport {
  // (yes + 0.5 * partial) / 8
  double score = 0.0;
  // C1..C8 in numeric order, notes verbatim.
  std::vector<std::pair<std::string, RubricEntry>> entries;
};

const std::vector<std::string>& RubricKeys();

// Throws InputError when a criterion is missing or an unknown key appears.
RubricReport ScoreRubric(const DesiderataRubric& rubric);

// {"criteria": {"C1": {"answer": "yes", "note": "..."}, ...}}
DesiderataRubric RubricFromJson(const nlohmann::json& json);

}  // namespace langgames

#endif  // LANGGAMES_WORLDS_RUBRIC_H_
