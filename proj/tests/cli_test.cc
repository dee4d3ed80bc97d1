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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.h"
#include "json.hpp"
#include "support.h"

using namespace langgames;

namespace {

const std::string kData = LANGGAMES_TEST_DATA;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Data(const std::string& name) { return kData + "/" + name; }

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Spit(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

// A scratch directory per test case, removed on exit.
struct Scratch {
  std::filesystem::path dir;
  explicit Scratch(const std::string& name)
      : dir(std::filesystem::temp_directory_path() / ("langgames_cli_" + name)) {
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string operator/(const std::string& f) const { return (dir / f).string(); }
};

void CheckNdjson(const std::string& text) {
  const auto lines = lgtest::SplitLines(text);
  CHECK_FALSE(lines.empty());
  for (const auto& line : lines) {
    CHECK(nlohmann::json::accept(line));
  }
}

}  // namespace

TEST_CASE("run writes byte-identical transcripts for the same seed") {
  Scratch tmp("determinism");
  const Result a = Cli({"run", Data("run_gridworld.json"), "--out", tmp / "a.ndjson"});
  const Result b = Cli({"run", Data("run_gridworld.json"), "--out", tmp / "b.ndjson"});
  CHECK(a.code == kExitOk);
  CHECK(b.code == kExitOk);
  CHECK(Slurp(tmp / "a.ndjson") == Slurp(tmp / "b.ndjson"));
  CHECK(a.out.find("success  13 tokens") != std::string::npos);

  const Result c = Cli({"run", Data("run_gridworld.json"), "--seed", "8", "--out",
                        tmp / "c.ndjson"});
  CHECK(c.code == kExitOk);
  CHECK(Slurp(tmp / "c.ndjson").find("\"seed\":8") != std::string::npos);
}

TEST_CASE("parallel repeats match sequential ones") {
  Scratch tmp("jobs");
  const Result one = Cli({"run", Data("run_free_chat.json"), "--repeat", "12",
                          "--jobs", "1", "--out", tmp / "seq.ndjson"});
  const Result four = Cli({"run", Data("run_free_chat.json"), "--repeat", "12",
                           "--jobs", "4", "--out", tmp / "par.ndjson"});
  REQUIRE(one.code == kExitOk);
  REQUIRE(four.code == kExitOk);
  for (int seed = 3; seed < 15; ++seed) {
    const std::string s = std::to_string(seed);
    CHECK(Slurp(tmp / ("seq." + s + ".ndjson")) ==
          Slurp(tmp / ("par." + s + ".ndjson")));
  }
  CHECK(lgtest::SplitLines(one.out).size() == 13);
}

TEST_CASE("replay accepts genuine transcripts and rejects edited ones") {
  Scratch tmp("replay");
  for (const std::string cfg : {"run_gridworld.json", "run_free_chat.json",
                                "run_qa.json", "run_walls.json"}) {
    CAPTURE(cfg);
    REQUIRE(Cli({"run", Data(cfg), "--out", tmp / "t.ndjson"}).code == kExitOk);
    const Result ok = Cli({"replay", tmp / "t.ndjson", "--game", Data(cfg)});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("replay: OK") != std::string::npos);
    CHECK(ok.out.find("re-executed") != std::string::npos);

    auto lines = lgtest::SplitLines(Slurp(tmp / "t.ndjson"));
    auto token = nlohmann::ordered_json::parse(lines[1]);
    token["seq"] = 99;
    lines[1] = token.dump();
    std::string edited;
    for (const auto& l : lines) edited += l + "\n";
    Spit(tmp / "bad.ndjson", edited);
    const Result bad = Cli({"replay", tmp / "bad.ndjson", "--game", Data(cfg),
                            "--format", "ndjson"});
    CHECK(bad.code == kExitRuntime);
    CheckNdjson(bad.out);

    Spit(tmp / "junk.ndjson", "not a transcript\n");
    CHECK(Cli({"replay", tmp / "junk.ndjson", "--game", Data(cfg)}).code ==
          kExitRuntime);
  }

  // Against a bare game config only the invariants are checked.
  REQUIRE(Cli({"run", Data("run_gridworld.json"), "--out", tmp / "g.ndjson"})
              .code == kExitOk);
  Spit(tmp / "game.json", Cli({"export", "gridworld-nav"}).out);
  const Result game = Cli({"replay", tmp / "g.ndjson", "--game", tmp / "game.json"});
  CHECK(game.code == kExitOk);
  CHECK(game.out.find("re-executed") == std::string::npos);
}

TEST_CASE("exit codes") {
  const Result invalid = Cli({"classify", Data("game_missing_start.json")});
  CHECK(invalid.code == kExitValidation);
  CHECK(invalid.err.find("game_missing_start.json:56:13: /spec/turn/start: "
                         "missing required field \"start\"") != std::string::npos);

  const Result deadlock = Cli({"run", Data("run_deadlock.json")});
  CHECK(deadlock.code == kExitRuntime);
  CHECK(deadlock.out.find("deadlock") != std::string::npos);

  CHECK(Cli({"verify", Data("task_grid_qa.json"), Data("grid_qa.ndjson")}).code ==
        kExitOk);
  const Result corrupt =
      Cli({"verify", Data("task_grid_qa.json"), Data("grid_qa_corrupt.ndjson")});
  CHECK(corrupt.code == kExitFlagged);
  CHECK(corrupt.out.find("pair 4  FAIL") != std::string::npos);
  CHECK(corrupt.out.find("pair 18  FAIL") != std::string::npos);

  CHECK(Cli({"diagnose", "bias", Data("task_vqa.json"), Data("giraffe.ndjson"),
             "--deprive", "image"})
            .code == kExitFlagged);
  CHECK(Cli({"diagnose", "bias", Data("task_vqa.json"),
             Data("giraffe_control.ndjson"), "--deprive", "image"})
            .code == kExitOk);
  CHECK(Cli({"diagnose", "bias", Data("task_vqa.json"), Data("giraffe.ndjson"),
             "--deprive", "smell"})
            .code == kExitValidation);

  CHECK(Cli({"dance"}).code == kExitValidation);
  CHECK(Cli({"run"}).code == kExitValidation);
  CHECK(Cli({"run", Data("no_such_file.json")}).code == kExitValidation);
  CHECK(Cli({"run", Data("run_gridworld.json"), "--max-steps", "0"}).code ==
        kExitValidation);
  CHECK(Cli({"verify", Data("task_vqa.json"), Data("giraffe.ndjson")}).code ==
        kExitValidation);  // no oracle
  CHECK(Cli({"run", Data("task_vqa.json")}).code == kExitValidation);
  CHECK(Cli({"export", "chess"}).code == kExitValidation);
  CHECK(Cli({"--help"}).code == kExitOk);
}

TEST_CASE("ndjson output parses line by line") {
  Scratch tmp("ndjson");
  const std::vector<std::vector<std::string>> commands = {
      {"run", Data("run_qa.json"), "--repeat", "3"},
      {"verify", Data("task_grid_qa.json"), Data("grid_qa_corrupt.ndjson")},
      {"classify", Data("task_vqa.json")},
      {"classify", Data("run_free_chat.json")},
      {"diagnose", "bias", Data("task_vqa.json"), Data("giraffe.ndjson"),
       "--deprive", "image"},
      {"compare", Data("capabilities_vqa.json"), Data("capabilities_docqa.json")},
      {"rubric", Data("rubric_gridworld.json")},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("ndjson");
    CAPTURE(args[0]);
    const Result r = Cli(args);
    CHECK(r.code != kExitValidation);
    CheckNdjson(r.out);
  }
}

TEST_CASE("reporting commands") {
  const Result game = Cli({"classify", Data("run_gridworld.json")});
  CHECK(game.out == "gridworld-nav: game\n");
  CHECK(Cli({"classify", Data("run_free_chat.json")}).out == "free-chat: setting\n");
  const Result task = Cli({"classify", Data("task_grid_qa.json")});
  CHECK(task.out.find("inference      yes") != std::string::npos);

  const Result cmp = Cli({"compare", Data("capabilities_vqa.json"),
                          Data("capabilities_docqa.json")});
  CHECK(cmp.code == kExitOk);
  CHECK(cmp.out.find("added       {read, reason}") != std::string::npos);
  CHECK(cmp.out.find("dropped     {count}") != std::string::npos);

  const Result rubric = Cli({"rubric", Data("rubric_gridworld.json")});
  CHECK(rubric.out.find("score 0.6250") != std::string::npos);

  const Result exported = Cli({"export", "qa-game"});
  CHECK(exported.code == kExitOk);
  Scratch tmp("export");
  Spit(tmp / "qa.json", exported.out);
  CHECK(Cli({"classify", tmp / "qa.json"}).out == "qa-game: game\n");
  CHECK(Cli({"run", tmp / "qa.json"}).code == kExitOk);
  // An altered inline game has no demo bindings to fall back on.
  auto altered = nlohmann::json::parse(exported.out);
  altered["spec"]["description"] = "changed";
  Spit(tmp / "qa2.json", altered.dump());
  const Result unbound = Cli({"run", tmp / "qa2.json"});
  CHECK(unbound.code == kExitValidation);
  CHECK(unbound.err.find("policies") != std::string::npos);
  CHECK(Cli({"export", "grid-qa"}).out.find("\"kind\": \"task\"") !=
        std::string::npos);
}
