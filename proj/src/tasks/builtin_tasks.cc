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

#include "langgames/tasks/builtin_tasks.h"

#include <array>

#include "langgames/core/errors.h"

namespace langgames {
namespace {

constexpr std::array<const char*, 4> kDirections = {"north", "south", "east",
                                                    "west"};

bool IsGridCell(const nlohmann::json& value) {
  return value.is_array() && value.size() == 2 &&
         value[0].is_number_integer() && value[1].is_number_integer() &&
         value[0].get<long long>() >= 0 && value[1].get<long long>() >= 0;
}

bool IsGridQuestion(const nlohmann::json& value) {
  return value.is_string() &&
         GridQuestionDirection(value.get<std::string>()).has_value();
}

bool IsYesNo(const nlohmann::json& value) {
  return value == "yes" || value == "no";
}

ModalRecord EchoOracle(const ModalRecord& x) { return x; }

ModalRecord GridQaOracle(const ModalRecord& x) {
  const nlohmann::json& agent = x.at("agent").value;
  const nlohmann::json& goal = x.at("goal").value;
  const nlohmann::json& q = x.at("q").value;
  if (!IsGridCell(agent) || !IsGridCell(goal) || !q.is_string()) {
    throw InputError("grid-qa input is malformed");
  }
  ModalRecord y;
  y.Set("a",
        AnswerGridQuestion(agent[0].get<int>(), agent[1].get<int>(),
                           goal[0].get<int>(), goal[1].get<int>(),
                           q.get<std::string>()),
        Modality::kLanguage);
  return y;
}

}  // namespace

std::vector<std::string> GridQuestions() {
  std::vector<std::string> out;
  for (const char* d : kDirections) {
    out.push_back(std::string("is the goal ") + d + " of the agent?");
  }
  return out;
}

std::optional<std::string> GridQuestionDirection(std::string_view question) {
  constexpr std::string_view kPrefix = "is the goal ";
  constexpr std::string_view kSuffix = " of the agent?";
  if (question.size() <= kPrefix.size() + kSuffix.size() ||
      question.substr(0, kPrefix.size()) != kPrefix ||
      question.substr(question.size() - kSuffix.size()) != kSuffix) {
    return std::nullopt;
  }
  std::string_view word = question.substr(
      kPrefix.size(), question.size() - kPrefix.size() - kSuffix.size());
  for (const char* d : kDirections) {
    if (word == d) return std::string(d);
  }
  return std::nullopt;
}

std::string AnswerGridQuestion(int agent_col, int agent_row, int goal_col,
                               int goal_row, std::string_view question) {
  auto direction = GridQuestionDirection(question);
  if (!direction) {
    throw InputError("question outside the grid-qa grammar: '" +
                     std::string(question) + "'");
  }
  // Row numbers grow northwards, columns eastwards.
  bool yes = false;
  if (*direction == "north") yes = goal_row > agent_row;
  if (*direction == "south") yes = goal_row < agent_row;
  if (*direction == "east") yes = goal_col > agent_col;
  if (*direction == "west") yes = goal_col < agent_col;
  return yes ? "yes" : "no";
}

TaskSpec EchoTask() {
  TaskSpec task;
  task.name = "echo";
  task.input = RecordSchema({{"text", Modality::kLanguage, {}, ""}});
  task.output = RecordSchema({{"text", Modality::kLanguage, {}, ""}});
  task.oracle = EchoOracle;
  task.oracle_name = "echo";
  task.description = "Repeat the input text unchanged.";
  return task;
}

TaskSpec GridQaTask() {
  TaskSpec task;
  task.name = "grid-qa";
  task.input = RecordSchema({
      {"agent", Modality::kOther, IsGridCell, "grid-cell"},
      {"goal", Modality::kOther, IsGridCell, "grid-cell"},
      {"q", Modality::kLanguage, IsGridQuestion, "grid-question"},
  });
  task.output = RecordSchema({{"a", Modality::kLanguage, IsYesNo, "yes-no"}});
  task.oracle = GridQaOracle;
  task.oracle_name = "grid-qa";
  task.description =
      "Answer a polar question about where the goal cell lies relative to "
      "the agent cell.";
  return task;
}

TaskSpec TranslationShapedTask() {
  TaskSpec task;
  task.name = "translation";
  task.input = RecordSchema({{"source", Modality::kLanguage, {}, ""}});
  task.output = RecordSchema({{"target", Modality::kLanguage, {}, ""}});
  task.description =
      "The output expression is a translation of the input expression.";
  return task;
}

TaskSpec ImageDescriptionShapedTask() {
  TaskSpec task;
  task.name = "image-description";
  task.input = RecordSchema({{"image", Modality::kOther, {}, ""}});
  task.output = RecordSchema({{"caption", Modality::kLanguage, {}, ""}});
  task.description = "The output expression describes the input image.";
  return task;
}

std::vector<std::string> BuiltinTaskNames() {
  return {"echo", "grid-qa", "image-description", "translation"};
}

TaskSpec LookupTask(std::string_view name) {
  if (name == "echo") return EchoTask();
  if (name == "grid-qa") return GridQaTask();
  if (name == "translation") return TranslationShapedTask();
  if (name == "image-description") return ImageDescriptionShapedTask();
  throw NotFoundError("no built-in task named '" + std::string(name) + "'");
}

Oracle LookupOracle(std::string_view name) {
  if (name == "echo") return EchoOracle;
  if (name == "grid-qa") return GridQaOracle;
  throw NotFoundError("no oracle named '" + std::string(name) + "'");
}

std::function<bool(const nlohmann::json&)> LookupValidator(
    std::string_view name) {
  if (name == "grid-cell") return IsGridCell;
  if (name == "grid-question") return IsGridQuestion;
  if (name == "yes-no") return IsYesNo;
  throw NotFoundError("no field validator named '" + std::string(name) + "'");
}

}  // namespace langgames
