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

#ifndef LANGGAMES_TASKS_BUILTIN_TASKS_H_
#define LANGGAMES_TASKS_BUILTIN_TASKS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langgames/tasks/task.h"

namespace langgames {

// {text: language} -> {text: language}, oracle is the identity.
TaskSpec EchoTask();

// Polar questions about the relative position of two grid cells.
// Input: agent [col,row] (other), goal [col,row] (other), q (language),
// where q is "is the goal <north|south|east|west> of the agent?".
// Output: a (language), "yes" or "no".
TaskSpec GridQaTask();

// Shape-only tasks without oracles, used for taxonomy checks.
TaskSpec TranslationShapedTask();
TaskSpec ImageDescriptionShapedTask();

// Throws NotFoundError.
TaskSpec LookupTask(std::string_view name);
std::vector<std::string> BuiltinTaskNames();

// Oracles addressable by name from configs ("echo", "grid-qa").
// Throws NotFoundError.
Oracle LookupOracle(std::string_view name);
// Field validators addressable by name ("grid-cell", "grid-question",
// "yes-no"). Throws NotFoundError.
std::function<bool(const nlohmann::json&)> LookupValidator(
    std::string_view name);

// Grid-QA grammar helpers, shared with the question-answering game.
std::vector<std::string> GridQuestions();
std::optional<std::string> GridQuestionDirection(std::string_view question);
// "yes"/"no"; throws InputError for questions outside the grammar.
std::string AnswerGridQuestion(int agent_col, int agent_row, int goal_col,
                               int goal_row, std::string_view question);

}  // namespace langgames

#endif  // LANGGAMES_TASKS_BUILTIN_TASKS_H_
