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

#include "langgames/config/config.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "langgames/core/errors.h"
#include "langgames/refgames/catalog.h"
#include "langgames/refgames/components.h"
#include "langgames/refgames/policies.h"
#include "langgames/tasks/builtin_tasks.h"

namespace langgames {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& pointer, const std::string& message) {
  throw ConfigError(std::vector<Diagnostic>{{pointer, message, 0, 0}});
}

std::string Token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// Runs `body`; library errors other than ConfigError are pinned to `at`.
template <typename F>
auto Guard(const std::string& at, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    Fail(at, e.what());
  } catch (const Json::exception& e) {
    Fail(at, e.what());
  }
}

// Prefixes every pointer in `e` with `base`.
[[noreturn]] void Rebase(const ConfigError& e, const std::string& base) {
  std::vector<Diagnostic> out = e.diagnostics();
  for (Diagnostic& d : out) d.pointer = base + d.pointer;
  throw ConfigError(std::move(out));
}

void RequireObject(const Json& json, const std::string& at) {
  if (!json.is_object()) Fail(at, "expected an object");
}

void CheckKeys(const Json& json, const std::string& at,
               const std::set<std::string>& allowed) {
  RequireObject(json, at);
  for (const auto& [key, value] : json.items()) {
    if (!allowed.count(key)) Fail(at + "/" + Token(key), "unknown field \"" + key + "\"");
  }
}

const Json& Field(const Json& obj, const std::string& at, const char* key) {
  if (!obj.contains(key)) {
    Fail(at + "/" + key, std::string("missing required field \"") + key + "\"");
  }
  return obj[key];
}

std::string String(const Json& json, const std::string& at) {
  if (!json.is_string()) Fail(at, "expected a string");
  return json.get<std::string>();
}

std::string StringField(const Json& obj, const std::string& at,
                        const char* key) {
  return String(Field(obj, at, key), at + "/" + key);
}

std::string OptionalString(const Json& obj, const std::string& at,
                           const char* key, const std::string& fallback) {
  return obj.contains(key) ? String(obj[key], at + "/" + key) : fallback;
}

std::vector<std::string> StringList(const Json& json, const std::string& at) {
  if (!json.is_array()) Fail(at, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < json.size(); ++i) {
    out.push_back(String(json[i], at + "/" + std::to_string(i)));
  }
  return out;
}

PlayerSet StringSet(const Json& json, const std::string& at) {
  std::vector<std::string> list = StringList(json, at);
  PlayerSet out(list.begin(), list.end());
  if (out.size() != list.size()) Fail(at, "duplicate entries");
  return out;
}

std::int64_t Integer(const Json& json, const std::string& at,
                     std::int64_t min) {
  if (!json.is_number_integer()) Fail(at, "expected an integer");
  if (json.is_number_unsigned() &&
      json.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    Fail(at, "integer out of range");
  }
  const std::int64_t value = json.get<std::int64_t>();
  if (value < min) Fail(at, "must be at least " + std::to_string(min));
  return value;
}

int SmallInteger(const Json& json, const std::string& at, int min) {
  const std::int64_t value = Integer(json, at, min);
  if (value > std::numeric_limits<int>::max()) Fail(at, "integer out of range");
  return static_cast<int>(value);
}

template <typename T>
OrderedJson Ordered(const T& json) {
  return OrderedJson::parse(Json(json).dump());
}

// --- games -----------------------------------------------------------------

OrderedJson PlayerKindMap(const std::map<PlayerKind, PlayerSet>& map) {
  OrderedJson out = OrderedJson::object();
  for (const auto& [key, set] : map) out[key.first][key.second] = set;
  return out;
}

OrderedJson TurnToJson(const TurnRule& turn) {
  OrderedJson out;
  out["type"] = std::string(TurnRuleTypeName(turn.type()));
  switch (turn.type()) {
    case TurnRule::Type::kFreeInitiative:
      out["players"] = turn.order();
      break;
    case TurnRule::Type::kStrictAlternation:
      out["order"] = turn.order();
      out["start"] = turn.start();
      break;
    case TurnRule::Type::kTable:
      out["start"] = turn.start();
      out["next"] = PlayerKindMap(turn.table());
      break;
  }
  return out;
}

std::vector<Player> PlayersFromJson(const Json& json, const std::string& at) {
  if (!json.is_array()) Fail(at, "expected an array of players");
  std::vector<Player> out;
  for (std::size_t i = 0; i < json.size(); ++i) {
    const std::string here = at + "/" + std::to_string(i);
    CheckKeys(json[i], here, {"id", "role"});
    Player p;
    p.id = StringField(json[i], here, "id");
    const std::string role = OptionalString(json[i], here, "role", "regular");
    p.role = Guard(here + "/role", [&] { return ParsePlayerRole(role); });
    out.push_back(std::move(p));
  }
  return out;
}

std::map<std::string, ActionSpace> SpacesFromJson(const Json& json,
                                                  const std::string& at) {
  RequireObject(json, at);
  std::map<std::string, ActionSpace> out;
  for (const auto& [owner, kinds] : json.items()) {
    const std::string here = at + "/" + Token(owner);
    if (!kinds.is_array()) Fail(here, "expected an array of action kinds");
    std::vector<ActionKind> list;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      const std::string item = here + "/" + std::to_string(i);
      CheckKeys(kinds[i], item, {"kind", "schema"});
      ActionKind kind;
      kind.kind = StringField(kinds[i], item, "kind");
      const Json& schema = Field(kinds[i], item, "schema");
      kind.schema =
          Guard(item + "/schema", [&] { return SchemaFromJson(schema); });
      list.push_back(std::move(kind));
    }
    out[owner] = Guard(here, [&] { return ActionSpace(owner, std::move(list)); });
  }
  return out;
}

std::map<PlayerKind, PlayerSet> PlayerKindMapFromJson(const Json& json,
                                                      const std::string& at) {
  RequireObject(json, at);
  std::map<PlayerKind, PlayerSet> out;
  for (const auto& [player, kinds] : json.items()) {
    const std::string here = at + "/" + Token(player);
    RequireObject(kinds, here);
    for (const auto& [kind, set] : kinds.items()) {
      out[{player, kind}] = StringSet(set, here + "/" + Token(kind));
    }
  }
  return out;
}

ObservabilityRule ObservabilityFromJson(const Json& json, const std::string& at,
                                        const std::vector<Player>& players,
                                        const std::map<std::string, ActionSpace>& spaces) {
  CheckKeys(json, at, {"deviant", "all", "observers"});
  bool deviant = false;
  if (json.contains("deviant")) {
    if (!json["deviant"].is_boolean()) Fail(at + "/deviant", "expected a boolean");
    deviant = json["deviant"].get<bool>();
  }
  const bool all = json.value("all", false);
  if (json.contains("all") && !json["all"].is_boolean()) {
    Fail(at + "/all", "expected a boolean");
  }
  if (all == json.contains("observers")) {
    Fail(at, "give either \"all\": true or an \"observers\" map");
  }
  if (all) {
    ObservabilityRule rule = ObservabilityRule::AllObserve(players, spaces);
    return ObservabilityRule(rule.entries(), deviant);
  }
  return ObservabilityRule(PlayerKindMapFromJson(json["observers"], at + "/observers"),
                           deviant);
}

TurnRule TurnFromJson(const Json& json, const std::string& at) {
  RequireObject(json, at);
  const std::string type = StringField(json, at, "type");
  if (type == "free_initiative") {
    CheckKeys(json, at, {"type", "players"});
    return TurnRule::FreeInitiative(
        StringList(Field(json, at, "players"), at + "/players"));
  }
  if (type == "strict_alternation") {
    CheckKeys(json, at, {"type", "order", "start"});
    std::vector<std::string> order =
        StringList(Field(json, at, "order"), at + "/order");
    std::vector<std::string> start =
        StringList(Field(json, at, "start"), at + "/start");
    if (start.size() != 1) {
      Fail(at + "/start", "strict alternation starts with exactly one player");
    }
    return TurnRule::StrictAlternation(std::move(order), start.front());
  }
  if (type == "table") {
    CheckKeys(json, at, {"type", "start", "next"});
    PlayerSet start = StringSet(Field(json, at, "start"), at + "/start");
    std::map<PlayerKind, PlayerSet> next;
    if (json.contains("next")) next = PlayerKindMapFromJson(json["next"], at + "/next");
    return TurnRule::Table(std::move(start), std::move(next));
  }
  Fail(at + "/type", "turn rule type must be free_initiative, "
                     "strict_alternation or table; got '" + type + "'");
}

EvaluationRule EvaluationFromJson(const Json& json, const std::string& at,
                                  const std::optional<EnvironmentSpec>& env) {
  CheckKeys(json, at, {"verdicts", "neutral", "timeout", "rule"});
  const Json& list = Field(json, at, "verdicts");
  if (!list.is_array()) Fail(at + "/verdicts", "expected an array of verdicts");
  std::vector<VerdictDecl> verdicts;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string here = at + "/verdicts/" + std::to_string(i);
    CheckKeys(list[i], here, {"name", "polarity"});
    VerdictDecl v;
    v.name = StringField(list[i], here, "name");
    const std::string polarity = StringField(list[i], here, "polarity");
    v.polarity =
        Guard(here + "/polarity", [&] { return ParsePolarity(polarity); });
    verdicts.push_back(std::move(v));
  }
  const std::string neutral = OptionalString(json, at, "neutral", "undecided");
  const std::string timeout = OptionalString(json, at, "timeout", "failure");
  const Json& rule = Field(json, at, "rule");
  return Guard(at + "/rule", [&] {
    return MakeEvaluationRule(std::move(verdicts), neutral, timeout, rule, env);
  });
}

// CheckGame names observability entries /observability/<player>/<kind>.
std::string InlinePointer(const std::string& pointer) {
  const std::string prefix = "/observability/";
  if (pointer.rfind(prefix, 0) == 0) {
    return "/observability/observers/" + pointer.substr(prefix.size());
  }
  return pointer;
}

// --- tasks -----------------------------------------------------------------

OrderedJson SchemaFieldsToJson(const RecordSchema& schema) {
  OrderedJson out = OrderedJson::array();
  for (const FieldSpec& f : schema.fields()) {
    OrderedJson field;
    field["name"] = f.name;
    field["modality"] = std::string(ModalityName(f.modality));
    if (!f.validator_name.empty()) field["validator"] = f.validator_name;
    out.push_back(std::move(field));
  }
  return out;
}

RecordSchema SchemaFieldsFromJson(const Json& json, const std::string& at) {
  if (!json.is_array()) Fail(at, "expected an array of fields");
  std::vector<FieldSpec> fields;
  for (std::size_t i = 0; i < json.size(); ++i) {
    const std::string here = at + "/" + std::to_string(i);
    CheckKeys(json[i], here, {"name", "modality", "validator"});
    FieldSpec f;
    f.name = StringField(json[i], here, "name");
    const std::string modality = StringField(json[i], here, "modality");
    f.modality = Guard(here + "/modality", [&] { return ParseModality(modality); });
    if (json[i].contains("validator")) {
      f.validator_name = String(json[i]["validator"], here + "/validator");
      f.validator = Guard(here + "/validator",
                          [&] { return LookupValidator(f.validator_name); });
    }
    fields.push_back(std::move(f));
  }
  return Guard(at, [&] { return RecordSchema(std::move(fields)); });
}

TaskSpec ResolveTask(const Json& doc) {
  if (doc.contains("builtin") == doc.contains("spec")) {
    Fail("", "a task config needs exactly one of \"builtin\" or \"spec\"");
  }
  if (doc.contains("builtin")) {
    const std::string name = String(doc["builtin"], "/builtin");
    return Guard("/builtin", [&] { return LookupTask(name); });
  }
  try {
    return TaskFromJson(doc["spec"]);
  } catch (const ConfigError& e) {
    Rebase(e, "/spec");
  }
}

// --- runs ------------------------------------------------------------------

Scheduling ParseScheduling(const std::string& name, const std::string& at) {
  if (name == "uniform") return Scheduling::kUniform;
  if (name == "round_robin") return Scheduling::kRoundRobin;
  Fail(at, "scheduling must be uniform or round_robin; got '" + name + "'");
}

RunConfig RunFromJson(const Json& doc) {
  CheckKeys(doc, "", {"kind", "game", "policies", "seed", "max_steps", "out",
                      "scheduling", "repeat"});
  RunConfig run;
  run.game_ref = Field(doc, "", "game");
  try {
    run.game = ResolveGame(run.game_ref);
  } catch (const ConfigError& e) {
    Rebase(e, "/game");
  }
  if (doc.contains("policies")) {
    RequireObject(doc["policies"], "/policies");
    run.policies = doc["policies"];
  } else if (run.game_ref.is_string() ||
             (run.game_ref.is_object() && run.game_ref.contains("builtin"))) {
    const std::string name = run.game_ref.is_string()
                                 ? run.game_ref.get<std::string>()
                                 : run.game_ref["builtin"].get<std::string>();
    run.policies = DemoPolicyBindings(name);
  } else {
    Fail("/policies", "missing required field \"policies\"");
  }
  for (const std::string& player : run.game.RegularPlayers()) {
    if (!run.policies.contains(player)) {
      Fail("/policies/" + Token(player),
           "no policy bound for player '" + player + "'");
    }
  }
  for (const auto& [player, binding] : run.policies.items()) {
    const Player* p = run.game.FindPlayer(player);
    if (p == nullptr || p->role != PlayerRole::kRegular) {
      Fail("/policies/" + Token(player),
           "'" + player + "' is not a regular player of the game");
    }
  }
  if (doc.contains("seed")) {
    run.seed = static_cast<std::uint64_t>(Integer(doc["seed"], "/seed", 0));
  }
  run.max_steps = doc.contains("max_steps")
                      ? SmallInteger(doc["max_steps"], "/max_steps", 1)
                      : run.game.default_max_steps;
  run.out = OptionalString(doc, "", "out", "");
  run.scheduling = ParseScheduling(
      OptionalString(doc, "", "scheduling", "uniform"), "/scheduling");
  if (doc.contains("repeat")) run.repeat = SmallInteger(doc["repeat"], "/repeat", 1);
  // Policy construction validates the bindings before any run starts.
  MakePolicies(run.policies, run.game, run.seed);
  return run;
}

ParsedConfig Dispatch(const Json& doc) {
  RequireObject(doc, "");
  const std::string kind = StringField(doc, "", "kind");
  ParsedConfig out;
  if (kind == "task") {
    CheckKeys(doc, "", {"kind", "builtin", "spec"});
    out.kind = ConfigKind::kTask;
    out.task = ResolveTask(doc);
    Guard("", [&] { ValidateTask(*out.task); });
  } else if (kind == "environment") {
    CheckKeys(doc, "", {"kind", "spec"});
    out.kind = ConfigKind::kEnvironment;
    const Json& spec = Field(doc, "", "spec");
    out.environment = Guard("/spec", [&] { return MakeEnvironment(spec); });
  } else if (kind == "game") {
    CheckKeys(doc, "", {"kind", "builtin", "overrides", "spec"});
    out.kind = ConfigKind::kGame;
    Json ref = doc;
    ref.erase("kind");
    out.game = ResolveGame(ref);
  } else if (kind == "run") {
    out.kind = ConfigKind::kRun;
    out.run = RunFromJson(doc);
    out.game = out.run->game;
  } else if (kind == "capabilities") {
    out.kind = ConfigKind::kCapabilities;
    Json body = doc;
    body.erase("kind");
    out.capabilities = Guard("", [&] { return CapabilitiesFromJson(body); });
  } else if (kind == "rubric") {
    CheckKeys(doc, "", {"kind", "criteria"});
    out.kind = ConfigKind::kRubric;
    out.rubric = Guard("/criteria", [&] { return RubricFromJson(doc); });
  } else {
    Fail("/kind", "kind must be task, environment, game, run, capabilities "
                  "or rubric; got '" + kind + "'");
  }
  return out;
}

}  // namespace

nlohmann::ordered_json GameToJson(const GameSpec& spec) {
  if (spec.evaluation.descriptor.is_null() || spec.nature.descriptor.is_null() ||
      (spec.environment && spec.environment->descriptor.is_null())) {
    throw UnsupportedError("game '" + spec.name +
                           "' has components assembled in code and cannot "
                           "be serialized");
  }
  OrderedJson out;
  out["name"] = spec.name;
  out["description"] = spec.description;
  out["players"] = OrderedJson::array();
  for (const Player& p : spec.players) {
    out["players"].push_back(
        {{"id", p.id}, {"role", std::string(PlayerRoleName(p.role))}});
  }
  out["spaces"] = OrderedJson::object();
  for (const auto& [owner, space] : spec.spaces) {
    OrderedJson kinds = OrderedJson::array();
    for (const ActionKind& k : space.kinds()) {
      OrderedJson entry;
      entry["kind"] = k.kind;
      entry["schema"] = Ordered(SchemaToJson(k.schema));
      kinds.push_back(std::move(entry));
    }
    out["spaces"][owner] = std::move(kinds);
  }
  out["observability"]["deviant"] = spec.observability.deviant();
  out["observability"]["observers"] =
      PlayerKindMap(spec.observability.entries());
  out["turn"] = TurnToJson(spec.turn);
  OrderedJson& eval = out["evaluation"];
  eval["verdicts"] = OrderedJson::array();
  for (const VerdictDecl& v : spec.evaluation.verdicts) {
    eval["verdicts"].push_back(
        {{"name", v.name}, {"polarity", std::string(PolarityName(v.polarity))}});
  }
  eval["neutral"] = spec.evaluation.neutral;
  eval["timeout"] = spec.evaluation.timeout;
  eval["rule"] = Ordered(spec.evaluation.descriptor);
  if (spec.environment) out["environment"] = Ordered(spec.environment->descriptor);
  out["nature"] = Ordered(spec.nature.descriptor);
  out["default_max_steps"] = spec.default_max_steps;
  return out;
}

GameSpec GameFromJson(const nlohmann::json& json) {
  CheckKeys(json, "", {"name", "description", "players", "spaces",
                       "observability", "turn", "evaluation", "environment",
                       "nature", "default_max_steps"});
  GameSpec spec;
  spec.name = StringField(json, "", "name");
  spec.description = OptionalString(json, "", "description", "");
  spec.players = PlayersFromJson(Field(json, "", "players"), "/players");
  spec.spaces = SpacesFromJson(Field(json, "", "spaces"), "/spaces");
  if (json.contains("environment") && !json["environment"].is_null()) {
    spec.environment = Guard(
        "/environment", [&] { return MakeEnvironment(json["environment"]); });
  }
  spec.observability = ObservabilityFromJson(
      Field(json, "", "observability"), "/observability", spec.players,
      spec.spaces);
  spec.turn = TurnFromJson(Field(json, "", "turn"), "/turn");
  spec.evaluation = EvaluationFromJson(Field(json, "", "evaluation"),
                                       "/evaluation", spec.environment);
  spec.nature = json.contains("nature")
                    ? Guard("/nature",
                            [&] { return MakeNaturePolicy(json["nature"]); })
                    : InertNature();
  if (json.contains("default_max_steps")) {
    spec.default_max_steps =
        SmallInteger(json["default_max_steps"], "/default_max_steps", 1);
  }
  std::vector<Diagnostic> problems = CheckGame(spec);
  if (!problems.empty()) {
    for (Diagnostic& d : problems) d.pointer = InlinePointer(d.pointer);
    throw ConfigError(std::move(problems));
  }
  return spec;
}

nlohmann::ordered_json TaskToJson(const TaskSpec& task) {
  OrderedJson out;
  out["name"] = task.name;
  out["description"] = task.description;
  out["input"] = SchemaFieldsToJson(task.input);
  out["output"] = SchemaFieldsToJson(task.output);
  if (!task.oracle_name.empty()) out["oracle"] = task.oracle_name;
  return out;
}

TaskSpec TaskFromJson(const nlohmann::json& json) {
  CheckKeys(json, "", {"name", "description", "input", "output", "oracle"});
  TaskSpec task;
  task.name = StringField(json, "", "name");
  task.description = OptionalString(json, "", "description", "");
  task.input = SchemaFieldsFromJson(Field(json, "", "input"), "/input");
  task.output = SchemaFieldsFromJson(Field(json, "", "output"), "/output");
  if (json.contains("oracle")) {
    task.oracle_name = String(json["oracle"], "/oracle");
    task.oracle = Guard("/oracle", [&] { return LookupOracle(task.oracle_name); });
  }
  Guard("", [&] { ValidateTask(task); });
  return task;
}

GameSpec ResolveGame(const nlohmann::json& ref) {
  if (ref.is_string()) {
    const std::string name = ref.get<std::string>();
    return Guard("", [&] { return LoadBuiltin(name); });
  }
  RequireObject(ref, "");
  if (ref.contains("builtin") == ref.contains("spec")) {
    Fail("", "a game reference needs exactly one of \"builtin\" or \"spec\"");
  }
  if (ref.contains("builtin")) {
    CheckKeys(ref, "", {"builtin", "overrides"});
    const std::string name = String(ref["builtin"], "/builtin");
    const std::vector<std::string> names = BuiltinGameNames();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      Fail("/builtin", "no built-in game named '" + name + "'");
    }
    const Json overrides = ref.value("overrides", Json::object());
    return Guard("/overrides", [&] { return LoadBuiltin(name, overrides); });
  }
  CheckKeys(ref, "", {"spec"});
  try {
    return GameFromJson(ref["spec"]);
  } catch (const ConfigError& e) {
    Rebase(e, "/spec");
  }
}

std::string_view ConfigKindName(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::kTask:
      return "task";
    case ConfigKind::kEnvironment:
      return "environment";
    case ConfigKind::kGame:
      return "game";
    case ConfigKind::kRun:
      return "run";
    case ConfigKind::kCapabilities:
      return "capabilities";
    case ConfigKind::kRubric:
      return "rubric";
  }
  return "game";
}

ParsedConfig ParseConfig(std::string_view text) {
  const Json doc = ParseJsonText(text);
  try {
    return Dispatch(doc);
  } catch (const ConfigError& e) {
    const JsonLocator locator(text);
    std::vector<Diagnostic> out = e.diagnostics();
    for (Diagnostic& d : out) {
      if (d.line == 0) std::tie(d.line, d.column) = locator.Locate(d.pointer);
    }
    throw ConfigError(std::move(out));
  } catch (const Error& e) {
    throw ConfigError(std::vector<Diagnostic>{{"", e.what(), 1, 1}});
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

ParsedConfig LoadConfigFile(const std::string& path) {
  return ParseConfig(ReadTextFile(path));
}

std::string SerializeGameConfig(const GameSpec& spec) {
  OrderedJson doc;
  doc["kind"] = "game";
  doc["spec"] = GameToJson(spec);
  return doc.dump(2) + "\n";
}

std::string SerializeTaskConfig(const TaskSpec& task) {
  OrderedJson doc;
  doc["kind"] = "task";
  doc["spec"] = TaskToJson(task);
  return doc.dump(2) + "\n";
}

}  // namespace langgames
