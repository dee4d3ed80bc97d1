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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "langgames/config/config.h"
#include "langgames/core/errors.h"
#include "langgames/diagnostics/bias.h"
#include "langgames/diagnostics/capabilities.h"
#include "langgames/games/orchestrator.h"
#include "langgames/games/replay.h"
#include "langgames/games/transcript.h"
#include "langgames/refgames/catalog.h"
#include "langgames/refgames/policies.h"
#include "langgames/tasks/builtin_tasks.h"
#include "langgames/tasks/dataset.h"
#include "langgames/worlds/rubric.h"

namespace langgames {
namespace {

using OrderedJson = nlohmann::ordered_json;

// Thrown once a failure has been reported; carries the exit code.
struct Exit {
  int code;
};

enum class Format { kText, kNdjson };

std::string Fixed(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << value;
  return out.str();
}

ParsedConfig Load(const std::string& path, std::ostream& err) {
  try {
    return LoadConfigFile(path);
  } catch (const ConfigError& e) {
    for (const Diagnostic& d : e.diagnostics()) {
      err << path << ":" << d.ToString() << "\n";
    }
    throw Exit{kExitValidation};
  }
}

template <typename T>
const T& Expect(const std::optional<T>& value, const std::string& path,
                const char* wanted, std::ostream& err) {
  if (!value) {
    err << path << ": expected a " << wanted << " config\n";
    throw Exit{kExitValidation};
  }
  return *value;
}

Dataset LoadDataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open '" + path + "'");
  try {
    return ReadDataset(in);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// --- run -------------------------------------------------------------------

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_steps;
  std::optional<std::string> out;
  std::optional<int> repeat;
  int jobs = 1;
};

RunConfig LoadRun(const std::string& path, std::ostream& err) {
  ParsedConfig cfg = Load(path, err);
  if (cfg.run) return *cfg.run;
  if (cfg.kind != ConfigKind::kGame) {
    err << path << ": expected a run or game config\n";
    throw Exit{kExitValidation};
  }
  // A game config runs with the demo bindings of its builtin. An inline spec
  // qualifies only when it is structurally identical to one.
  nlohmann::json doc = nlohmann::json::parse(ReadTextFile(path));
  doc.erase("kind");
  nlohmann::json run = {{"kind", "run"}, {"game", doc}};
  const std::vector<std::string> builtins = BuiltinGameNames();
  if (doc.contains("spec") &&
      std::count(builtins.begin(), builtins.end(), cfg.game->name) > 0 &&
      GameDigest(LoadBuiltin(cfg.game->name)) == GameDigest(*cfg.game)) {
    run["policies"] = DemoPolicyBindings(cfg.game->name);
  }
  try {
    return *ParseConfig(run.dump()).run;
  } catch (const ConfigError& e) {
    for (const Diagnostic& d : e.diagnostics()) {
      err << path << ": " << d.pointer << (d.pointer.empty() ? "" : ": ")
          << d.message << "\n";
    }
    throw Exit{kExitValidation};
  }
}

std::string OutPath(const std::string& out, int repeat, std::uint64_t seed) {
  if (out.empty() || repeat == 1) return out;
  std::filesystem::path p(out);
  p.replace_filename(p.stem().string() + "." + std::to_string(seed) +
                     p.extension().string());
  return p.string();
}

struct RunOutcome {
  std::uint64_t seed = 0;
  Transcript transcript;
  std::string runtime_error;  // deadlock or abort
  std::string fatal;          // anything else
};

int CmdRun(const RunArgs& args, Format format, std::ostream& out,
           std::ostream& err) {
  RunConfig run = LoadRun(args.config, err);
  if (args.seed) run.seed = *args.seed;
  if (args.max_steps) run.max_steps = *args.max_steps;
  if (args.out) run.out = *args.out;
  if (args.repeat) run.repeat = *args.repeat;
  if (run.max_steps < 1 || run.repeat < 1 || args.jobs < 1) {
    err << "error: --max-steps, --repeat and --jobs must be at least 1\n";
    return kExitValidation;
  }

  std::vector<RunOutcome> outcomes(run.repeat);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < run.repeat; i = next++) {
      RunOutcome& o = outcomes[i];
      o.seed = run.seed + static_cast<std::uint64_t>(i);
      try {
        PolicyMap policies = MakePolicies(run.policies, run.game, o.seed);
        o.transcript = RunGame(run.game, policies,
                               {run.max_steps, run.scheduling}, o.seed);
      } catch (const RunError& e) {
        o.transcript = e.partial();
        o.runtime_error = e.what();
      } catch (const std::exception& e) {
        o.fatal = e.what();
      }
    }
  };
  const int threads = std::min(args.jobs, run.repeat);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  int code = kExitOk;
  std::map<std::string, int> tally;
  for (const RunOutcome& o : outcomes) {
    if (!o.fatal.empty()) {
      err << "seed " << o.seed << ": error: " << o.fatal << "\n";
      code = std::max(code, kExitRuntime);
      continue;
    }
    const std::string path = OutPath(run.out, run.repeat, o.seed);
    if (!path.empty()) {
      std::ofstream file(path, std::ios::binary);
      if (!file) throw NotFoundError("cannot write '" + path + "'");
      WriteTranscript(file, o.transcript);
    }
    if (!o.runtime_error.empty()) {
      err << "seed " << o.seed << ": " << o.runtime_error << "\n";
      code = std::max(code, kExitRuntime);
    }
    ++tally[o.transcript.final_verdict];
    if (format == Format::kNdjson) {
      OrderedJson line;
      line["seed"] = o.seed;
      line["verdict"] = o.transcript.final_verdict;
      line["tokens"] = o.transcript.entries.size();
      if (!o.transcript.forfeited_by.empty()) {
        line["forfeited_by"] = o.transcript.forfeited_by;
      }
      if (!path.empty()) line["out"] = path;
      out << line.dump() << "\n";
    } else {
      out << "seed " << o.seed << "  " << o.transcript.final_verdict << "  "
          << o.transcript.entries.size() << " tokens";
      if (!o.transcript.forfeited_by.empty()) {
        out << "  (forfeited by " << o.transcript.forfeited_by << ")";
      }
      if (!path.empty()) out << "  -> " << path;
      out << "\n";
    }
  }
  if (format == Format::kNdjson) {
    OrderedJson summary;
    summary["game"] = run.game.name;
    summary["runs"] = run.repeat;
    summary["verdicts"] = tally;
    out << summary.dump() << "\n";
  } else {
    out << run.game.name << ": " << run.repeat << " run(s)";
    for (const auto& [verdict, count] : tally) {
      out << "  " << verdict << "=" << count;
    }
    out << "\n";
  }
  return code;
}

// --- replay ----------------------------------------------------------------

int CmdReplay(const std::string& transcript_path, const std::string& game_path,
              Format format, std::ostream& out, std::ostream& err) {
  ParsedConfig cfg = Load(game_path, err);
  const GameSpec& spec = Expect(cfg.game, game_path, "game or run", err);
  const std::string text = ReadTextFile(transcript_path);

  Transcript transcript;
  try {
    transcript = ParseTranscript(text);
  } catch (const InputError& e) {
    if (format == Format::kNdjson) {
      OrderedJson line;
      line["ok"] = false;
      line["error"] = e.what();
      out << line.dump() << "\n";
    } else {
      out << "transcript rejected: " << e.what() << "\n";
    }
    return kExitRuntime;
  }

  ReplayReport report = ReplayVerify(spec, transcript);
  if (cfg.run) {
    // With policies at hand the run can be re-executed and compared.
    Transcript expected;
    try {
      PolicyMap policies =
          MakePolicies(cfg.run->policies, spec, transcript.seed);
      expected = RunGame(spec, policies,
                         {std::max(transcript.max_steps, 1),
                          cfg.run->scheduling},
                         transcript.seed);
    } catch (const RunError& e) {
      expected = e.partial();
    }
    ReplayReport diff = CompareTranscripts(expected, transcript);
    report.violations.insert(report.violations.end(), diff.violations.begin(),
                             diff.violations.end());
  }

  for (const Violation& v : report.violations) {
    if (format == Format::kNdjson) {
      OrderedJson line;
      line["index"] = v.index;
      line["kind"] = std::string(ViolationKindName(v.kind));
      line["message"] = v.message;
      out << line.dump() << "\n";
    } else {
      out << (v.index == 0 ? std::string("transcript")
                           : "token " + std::to_string(v.index))
          << "  [" << ViolationKindName(v.kind) << "]  " << v.message << "\n";
    }
  }
  if (format == Format::kNdjson) {
    OrderedJson summary;
    summary["ok"] = report.ok();
    summary["tokens_checked"] = report.tokens_checked;
    summary["violations"] = report.violations.size();
    summary["reexecuted"] = cfg.run.has_value();
    out << summary.dump() << "\n";
  } else {
    out << "replay: "
        << (report.ok() ? "OK"
                        : std::to_string(report.violations.size()) +
                              " violation(s)")
        << " (" << report.tokens_checked << " tokens checked"
        << (cfg.run ? ", re-executed" : "") << ")\n";
  }
  return report.ok() ? kExitOk : kExitRuntime;
}

// --- verify ----------------------------------------------------------------

int CmdVerify(const std::string& task_path, const std::string& data_path,
              Format format, std::ostream& out, std::ostream& err) {
  ParsedConfig cfg = Load(task_path, err);
  const TaskSpec& task = Expect(cfg.task, task_path, "task", err);
  VerificationReport report = VerifyDataset(task, LoadDataset(data_path));
  for (const PairVerdict& v : report.verdicts) {
    if (format == Format::kNdjson) {
      OrderedJson line;
      line["index"] = v.index;
      line["pass"] = v.pass;
      line["loss"] = v.loss;
      if (!v.note.empty()) line["note"] = v.note;
      out << line.dump() << "\n";
    } else if (!v.pass) {
      out << "pair " << v.index << "  FAIL  loss " << Fixed(v.loss)
          << (v.note.empty() ? "" : "  " + v.note) << "\n";
    }
  }
  if (format == Format::kNdjson) {
    OrderedJson summary;
    summary["task"] = task.name;
    summary["pairs"] = report.verdicts.size();
    summary["failures"] = report.failures;
    summary["pass_rate"] = report.pass_rate;
    out << summary.dump() << "\n";
  } else {
    out << task.name << ": " << report.verdicts.size() - report.failures.size()
        << "/" << report.verdicts.size() << " pairs pass (pass rate "
        << Fixed(report.pass_rate) << ")\n";
  }
  return report.failures.empty() ? kExitOk : kExitFlagged;
}

// --- classify --------------------------------------------------------------

int CmdClassify(const std::string& path, Format format, std::ostream& out,
                std::ostream& err) {
  ParsedConfig cfg = Load(path, err);
  if (cfg.task) {
    const TaxonomyFlags flags = ClassifyTask(*cfg.task);
    const std::vector<std::pair<std::string, bool>> rows = {
        {"interpretation", flags.interpretation},
        {"generation", flags.generation},
        {"reference", flags.reference},
        {"inference", flags.inference}};
    if (format == Format::kNdjson) {
      OrderedJson line;
      line["task"] = cfg.task->name;
      for (const auto& [name, value] : rows) line[name] = value;
      out << line.dump() << "\n";
    } else {
      out << "task " << cfg.task->name << "\n";
      for (const auto& [name, value] : rows) {
        out << "  " << std::left << std::setw(15) << name
            << (value ? "yes" : "no") << "\n";
      }
    }
    return kExitOk;
  }
  const GameSpec& spec = Expect(cfg.game, path, "task, game or run", err);
  const ActivityKind kind = ClassifyActivity(spec);
  if (format == Format::kNdjson) {
    OrderedJson line;
    line["game"] = spec.name;
    line["activity"] = std::string(ActivityKindName(kind));
    out << line.dump() << "\n";
  } else {
    out << spec.name << ": " << ActivityKindName(kind) << "\n";
  }
  return kExitOk;
}

// --- diagnose bias ---------------------------------------------------------

struct BiasArgs {
  std::string task;
  std::string dataset;
  std::vector<std::string> deprive;
  double margin = kDefaultBiasMargin;
  std::uint64_t seed = 0;
};

int CmdBias(const BiasArgs& args, Format format, std::ostream& out,
            std::ostream& err) {
  ParsedConfig cfg = Load(args.task, err);
  const TaskSpec& task = Expect(cfg.task, args.task, "task", err);
  const std::set<std::string> deprive(args.deprive.begin(), args.deprive.end());
  BiasReport report = DeprivationTest(task, LoadDataset(args.dataset), deprive,
                                      args.seed, args.margin);
  if (format == Format::kNdjson) {
    out << BiasReportToJson(report).dump() << "\n";
  } else {
    out << FormatBiasReport(report);
  }
  return report.flagged ? kExitFlagged : kExitOk;
}

// --- compare, rubric, export -----------------------------------------------

int CmdCompare(const std::string& a_path, const std::string& b_path,
               Format format, std::ostream& out, std::ostream& err) {
  ParsedConfig a = Load(a_path, err);
  ParsedConfig b = Load(b_path, err);
  CapabilityComparison c = CompareCapabilities(
      Expect(a.capabilities, a_path, "capabilities", err),
      Expect(b.capabilities, b_path, "capabilities", err));
  if (format == Format::kNdjson) {
    out << ComparisonToJson(c).dump() << "\n";
  } else {
    out << FormatComparison(c);
  }
  return kExitOk;
}

int CmdRubric(const std::string& path, Format format, std::ostream& out,
              std::ostream& err) {
  ParsedConfig cfg = Load(path, err);
  RubricReport report =
      ScoreRubric(Expect(cfg.rubric, path, "rubric", err));
  for (const auto& [key, entry] : report.entries) {
    if (format == Format::kNdjson) {
      OrderedJson line;
      line["criterion"] = key;
      line["answer"] = std::string(RubricAnswerName(entry.answer));
      line["note"] = entry.note;
      out << line.dump() << "\n";
    } else {
      out << std::left << std::setw(4) << key;
      if (entry.note.empty()) {
        out << RubricAnswerName(entry.answer) << "\n";
      } else {
        out << std::setw(9) << RubricAnswerName(entry.answer) << entry.note
            << "\n";
      }
    }
  }
  if (format == Format::kNdjson) {
    OrderedJson summary;
    summary["score"] = report.score;
    out << summary.dump() << "\n";
  } else {
    out << "score " << Fixed(report.score) << "\n";
  }
  return kExitOk;
}

int CmdExport(const std::string& name, std::ostream& out) {
  const std::vector<std::string> games = BuiltinGameNames();
  if (std::find(games.begin(), games.end(), name) != games.end()) {
    out << SerializeGameConfig(LoadBuiltin(name));
    return kExitOk;
  }
  out << SerializeTaskConfig(LookupTask(name));
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Specify, run, replay and diagnose language games."};
  app.name("langgames");
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&format_name](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Report format")
        ->check(CLI::IsMember({"text", "ndjson"}));
  };

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a game from a config");
  run_cmd->add_option("config", run.config, "Run or game config")->required();
  run_cmd->add_option("--seed", run.seed, "Base seed");
  run_cmd->add_option("--max-steps", run.max_steps, "Token cap per run");
  run_cmd->add_option("--out", run.out, "Transcript output path");
  run_cmd->add_option("--repeat", run.repeat,
                      "Number of runs with consecutive seeds");
  run_cmd->add_option("--jobs", run.jobs, "Parallel runs");
  add_format(run_cmd);

  std::string transcript_path, game_path;
  CLI::App* replay_cmd =
      app.add_subcommand("replay", "Audit a transcript against its game");
  replay_cmd->add_option("transcript", transcript_path)->required();
  replay_cmd->add_option("--game", game_path, "Game or run config")
      ->required();
  add_format(replay_cmd);

  std::string task_path, data_path;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a dataset against a task oracle");
  verify_cmd->add_option("task", task_path)->required();
  verify_cmd->add_option("dataset", data_path)->required();
  add_format(verify_cmd);

  std::string classify_path;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Taxonomy flags of a task or Game/Setting of a game");
  classify_cmd->add_option("config", classify_path)->required();
  add_format(classify_cmd);

  BiasArgs bias;
  CLI::App* diagnose_cmd = app.add_subcommand("diagnose", "Dataset diagnostics");
  diagnose_cmd->require_subcommand(1);
  CLI::App* bias_cmd =
      diagnose_cmd->add_subcommand("bias", "Input-deprivation bias test");
  bias_cmd->add_option("task", bias.task)->required();
  bias_cmd->add_option("dataset", bias.dataset)->required();
  bias_cmd->add_option("--deprive", bias.deprive, "Fields to withhold")
      ->delimiter(',')
      ->required();
  bias_cmd->add_option("--margin", bias.margin, "Flag margin")
      ->check(CLI::Range(0.0, 1.0));
  bias_cmd->add_option("--seed", bias.seed, "Split seed");
  add_format(bias_cmd);

  std::string caps_a, caps_b;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Compare two capability sets");
  compare_cmd->add_option("a", caps_a)->required();
  compare_cmd->add_option("b", caps_b)->required();
  add_format(compare_cmd);

  std::string rubric_path;
  CLI::App* rubric_cmd =
      app.add_subcommand("rubric", "Score a desiderata rubric");
  rubric_cmd->add_option("file", rubric_path)->required();
  add_format(rubric_cmd);

  std::string export_name;
  CLI::App* export_cmd = app.add_subcommand(
      "export", "Print a builtin game or task as an inline config");
  export_cmd->add_option("name", export_name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }
  const Format format =
      format_name == "ndjson" ? Format::kNdjson : Format::kText;

  try {
    if (*run_cmd) return CmdRun(run, format, out, err);
    if (*replay_cmd) {
      return CmdReplay(transcript_path, game_path, format, out, err);
    }
    if (*verify_cmd) return CmdVerify(task_path, data_path, format, out, err);
    if (*classify_cmd) return CmdClassify(classify_path, format, out, err);
    if (*bias_cmd) return CmdBias(bias, format, out, err);
    if (*compare_cmd) return CmdCompare(caps_a, caps_b, format, out, err);
    if (*rubric_cmd) return CmdRubric(rubric_path, format, out, err);
    if (*export_cmd) return CmdExport(export_name, out);
  } catch (const Exit& e) {
    return e.code;
  } catch (const ConfigError& e) {
    for (const Diagnostic& d : e.diagnostics()) {
      err << "error: " << d.ToString() << "\n";
    }
    return kExitValidation;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitValidation;
}

}  // namespace langgames
