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

#ifndef LANGGAMES_CONFIG_CONFIG_H_
#define LANGGAMES_CONFIG_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "langgames/diagnostics/capabilities.h"
#include "langgames/games/game.h"
#include "langgames/games/orchestrator.h"
#include "langgames/tasks/task.h"
#include "langgames/worlds/environment.h"
#include "langgames/worlds/rubric.h"

namespace langgames {

// Source positions of every value in a JSON document, keyed by JSON pointer.
class JsonLocator {
 public:
  explicit JsonLocator(std::string_view text);

  // 1-based (line, column) of the value at `pointer`, or of its nearest
  // located ancestor; (0, 0) when nothing matches.
  std::pair<int, int> Locate(std::string_view pointer) const;

 private:
  std::map<std::string, std::pair<int, int>, std::less<>> positions_;
};

// 1-based (line, column) of byte `offset` in `text`.
std::pair<int, int> LineColumn(std::string_view text, std::size_t offset);

// Parses JSON text; syntax errors become a located ConfigError.
nlohmann::json ParseJsonText(std::string_view text);

// Inline game specs. GameFromJson reports problems as ConfigError with
// pointers relative to the spec object.
nlohmann::ordered_json GameToJson(const GameSpec& spec);
GameSpec GameFromJson(const nlohmann::json& json);

nlohmann::ordered_json TaskToJson(const TaskSpec& task);
TaskSpec TaskFromJson(const nlohmann::json& json);

// A game reference: a builtin name, {"builtin", "overrides"} or
// {"spec": {...}}.
GameSpec ResolveGame(const nlohmann::json& ref);

struct RunConfig {
  nlohmann::json game_ref;
  GameSpec game;
  nlohmann::json policies;  // player id -> policy binding
  std::uint64_t seed = 0;
  int max_steps = 0;        // the game's default when not given
  std::string out;          // transcript path; empty for none
  Scheduling scheduling = Scheduling::kUniform;
  int repeat = 1;           // runs with seeds seed, seed+1, ...
};

enum class ConfigKind { kTask, kEnvironment, kGame, kRun, kCapabilities,
                        kRubric };

std::string_view ConfigKindName(ConfigKind kind);

struct ParsedConfig {
  ConfigKind kind = ConfigKind::kGame;
  std::optional<TaskSpec> task;
  std::optional<EnvironmentSpec> environment;
  std::optional<GameSpec> game;  // also set for run configs
  std::optional<RunConfig> run;
  std::optional<ResolvedCapabilities> capabilities;
  std::optional<DesiderataRubric> rubric;
};

// Throws ConfigError whose diagnostics carry pointers and line positions.
ParsedConfig ParseConfig(std::string_view text);
ParsedConfig LoadConfigFile(const std::string& path);
std::string ReadTextFile(const std::string& path);

// {"kind": "game", "spec": ...} as indented text.
std::string SerializeGameConfig(const GameSpec& spec);
std::string SerializeTaskConfig(const TaskSpec& task);

}  // namespace langgames

#endif  // LANGGAMES_CONFIG_CONFIG_H_
