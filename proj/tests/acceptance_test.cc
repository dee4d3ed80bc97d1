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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "../tools/cli.h"
#include "langgames/config/config.h"
#include "langgames/core/errors.h"
#include "langgames/diagnostics/bias.h"
#include "langgames/games/orchestrator.h"
#include "langgames/games/replay.h"
#include "langgames/refgames/catalog.h"
#include "langgames/refgames/components.h"
#include "langgames/refgames/policies.h"
#include "langgames/tasks/builtin_tasks.h"
#include "support.h"

using namespace langgames;
using nlohmann::json;

namespace {

const std::string kData = LANGGAMES_TEST_DATA;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string Fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << std::fixed << v;
  return s.str();
}

std::size_t MovesBy(const Transcript& t, const std::string& player) {
  std::size_t n = 0;
  for (const auto& e : t.entries) n += e.token.originator == player;
  return n;
}

// 1. BFS-following policy matches independent shortest paths, within 5 s.
Outcome GridworldOracle() {
  const auto begin = std::chrono::steady_clock::now();
  Rng rng(2024);
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const lgtest::RandomGrid g = lgtest::MakeRandomGrid(rng, 6);
    const GameSpec spec = LoadBuiltin("gridworld-nav", g.Overrides());
    const Transcript t = RunGame(
        spec, MakePolicies({{"p1", {{"type", "bfs"}}}}, spec, i), {200}, i);
    const bool ok = t.final_verdict == "success" &&
                    static_cast<int>(MovesBy(t, "p1")) == g.distance;
    mismatches += !ok;
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - begin)
                             .count();
  return {mismatches == 0 && seconds < 5.0,
          "100 grids, " + std::to_string(mismatches) + " mismatches, " +
              Fmt(seconds) + " s"};
}

// 2. Observability audit over the built-ins and deviant variants.
Outcome ObservabilityAudit() {
  struct Variant {
    std::string builtin;
    json overrides;
  };
  auto hide = [](const std::string& player, const std::string& kind,
                 json observers) {
    return json{{"observability",
                 {{"entries",
                   {{{"player", player}, {"kind", kind}, {"observers", observers}}}}}}};
  };
  const std::vector<Variant> variants = {
      {"gridworld-nav", json::object()},
      {"free-chat", json::object()},
      {"qa-game", json::object()},
      {"gridworld-nav", hide("p1", "nav", {"p1"})},
      {"free-chat", hide("p1", "utt", {"p1", "N"})},
      {"qa-game", hide("answerer", "utt", {"answerer", "N"})},
  };
  int runs = 0, bad_runs = 0;
  std::size_t tokens = 0, violations = 0, leaks = 0;
  for (int i = 0; i < 1000; ++i) {
    const Variant& v = variants[i % variants.size()];
    const GameSpec spec = LoadBuiltin(v.builtin, v.overrides);
    const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(i);
    json bindings = DemoPolicyBindings(v.builtin);
    if (i % 2 == 1) {  // randomize whichever players allow it
      for (const std::string& p : spec.RegularPlayers()) {
        if (spec.SpaceOf(p).kinds().front().schema.enumerable()) {
          bindings[p] = {{"type", "random"}};
        }
      }
    }
    auto log = std::make_shared<lgtest::DeliveryLog>();
    Transcript t;
    try {
      t = RunGame(spec, lgtest::Audited(MakePolicies(bindings, spec, seed), log),
                  {spec.default_max_steps, i % 3 == 0 ? Scheduling::kRoundRobin
                                                      : Scheduling::kUniform},
                  seed);
    } catch (const RunError& e) {
      t = e.partial();
    }
    ++runs;
    const ReplayReport report =
        ReplayVerify(spec, ParseTranscript(SerializeTranscript(t)));
    const auto problems = lgtest::CheckDeliveries(spec, t, *log);
    tokens += t.entries.size();
    violations += report.violations.size();
    leaks += problems.size();
    bad_runs += !report.ok() || !problems.empty();
  }
  return {runs == 1000 && bad_runs == 0 && violations == 0 && leaks == 0,
          std::to_string(runs) + " runs, " + std::to_string(tokens) +
              " tokens, " + std::to_string(violations) +
              " replay violations, " + std::to_string(leaks) +
              " deliveries to non-observers"};
}

// 3. Nature's tokens do not depend on the evaluation rule.
Outcome NatureDisinterest() {
  const GameSpec base = LoadBuiltin("gridworld-nav", {{"width", 5}, {"height", 5},
                                                      {"goal", {4, 4}}});
  GameSpec relabeled = base;
  relabeled.evaluation = MakeEvaluationRule(
      {{"win", Polarity::kPositive}, {"loss", Polarity::kNegative},
       {"pending", Polarity::kNeutral}},
      "pending", "loss",
      {{"type", "gridworld-goal"}, {"positive", "win"}, {"negative", "loss"},
       {"neutral", "pending"}},
      relabeled.environment);
  GameSpec indifferent = base;
  indifferent.evaluation = ConstantEvaluation("undecided");
  indifferent.evaluation.verdicts = StandardVerdicts();
  indifferent.evaluation.descriptor = {{"type", "constant"}};

  auto nature_bytes = [](const Transcript& t, std::size_t limit) {
    std::string out;
    for (std::size_t i = 0; i < std::min(limit, t.entries.size()); ++i) {
      const auto& e = t.entries[i];
      if (e.token.originator == "N") {
        out += std::to_string(e.token.seq) + " " + e.token.action.kind + " " +
               e.token.action.payload.dump() + "\n";
      }
    }
    return out;
  };
  int identical = 0, prefix = 0;
  for (int i = 0; i < 50; ++i) {
    const json bindings = {{"p1", {{"type", "random"}}}};
    const RunLimits limits{80};
    const Transcript a = RunGame(base, MakePolicies(bindings, base, i), limits, i);
    const Transcript b =
        RunGame(relabeled, MakePolicies(bindings, relabeled, i), limits, i);
    const Transcript c =
        RunGame(indifferent, MakePolicies(bindings, indifferent, i), limits, i);
    const std::size_t all = static_cast<std::size_t>(-1);
    identical += nature_bytes(a, all) == nature_bytes(b, all) &&
                 a.entries.size() == b.entries.size();
    // A constant rule never stops early; compare over the shared prefix.
    prefix += nature_bytes(a, all) == nature_bytes(c, a.entries.size());
  }
  return {identical == 50 && prefix == 50,
          std::to_string(identical) + "/50 identical under relabeling, " +
              std::to_string(prefix) + "/50 prefix-identical under a constant rule"};
}

// 4. Setting/Game classification.
Outcome Classification() {
  const GameSpec chat = LoadBuiltin("free-chat");
  const Transcript t = RunGame(
      chat, MakePolicies(DemoPolicyBindings("free-chat"), chat, 4), {100}, 4);
  bool constant = t.entries.size() == 100 && t.final_verdict == "undecided";
  for (const auto& e : t.entries) constant = constant && e.verdict == "undecided";
  const bool kinds =
      ClassifyActivity(chat) == ActivityKind::kSetting &&
      ClassifyActivity(LoadBuiltin("gridworld-nav")) == ActivityKind::kGame &&
      ClassifyActivity(LoadBuiltin("qa-game")) == ActivityKind::kGame;
  return {constant && kinds,
          std::string("free-chat setting, gridworld-nav and qa-game game: ") +
              (kinds ? "yes" : "no") + "; 100-step chat constant undecided: " +
              (constant ? "yes" : "no")};
}

// 5. Input-deprivation bias test on the giraffe dataset and its control.
Outcome BiasDetection() {
  const TaskSpec task = lgtest::VqaTask();
  const BiasReport g1 = DeprivationTest(task, lgtest::GiraffeDataset(1), {"image"}, 1);
  const BiasReport g2 = DeprivationTest(task, lgtest::GiraffeDataset(1), {"image"}, 1);
  const BiasReport c1 =
      DeprivationTest(task, lgtest::ImageControlDataset(1), {"image"}, 1);
  const BiasReport c2 =
      DeprivationTest(task, lgtest::ImageControlDataset(1), {"image"}, 1);
  const bool giraffe = g1.deprived_accuracy >= 0.95 &&
                       g1.majority_accuracy == 0.5 && g1.flagged;
  const double gap = std::abs(c1.deprived_accuracy - c1.majority_accuracy);
  const bool control = gap < 0.07 && !c1.flagged;
  const bool stable = BiasReportToJson(g1) == BiasReportToJson(g2) &&
                      BiasReportToJson(c1) == BiasReportToJson(c2);
  return {giraffe && control && stable,
          "giraffe deprived " + Fmt(g1.deprived_accuracy) + " majority " +
              Fmt(g1.majority_accuracy) + (g1.flagged ? " flagged" : " not flagged") +
              "; control |diff| " + Fmt(gap) +
              (c1.flagged ? " flagged" : " not flagged") +
              (stable ? "; deterministic" : "; NOT deterministic")};
}

// 6. Dataset verification finds exactly the corrupted pairs.
Outcome VerificationExactness() {
  const TaskSpec task = GridQaTask();
  std::string detail;
  bool pass = VerifyDataset(task, lgtest::GridQaDataset(500, 66)).pass_rate == 1.0;
  for (int k : {1, 5, 20}) {
    Dataset data = lgtest::GridQaDataset(500, 66);
    std::vector<std::size_t> order(data.pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(900 + k);
    rng.Shuffle(order);
    std::set<std::size_t> corrupted;
    for (int j = 0; j < k; ++j) {
      data.pairs[order[j]].y = lgtest::FlipGridQaAnswer(data.pairs[order[j]].y);
      corrupted.insert(order[j] + 1);
    }
    const VerificationReport report = VerifyDataset(task, data);
    const std::set<std::size_t> flagged(report.failures.begin(),
                                        report.failures.end());
    std::size_t hits = 0;
    for (std::size_t i : flagged) hits += corrupted.count(i);
    const double precision = flagged.empty() ? 0.0 : double(hits) / flagged.size();
    const double recall = double(hits) / corrupted.size();
    pass = pass && precision == 1.0 && recall == 1.0;
    detail += (detail.empty() ? "" : ", ") + std::string("k=") +
              std::to_string(k) + " P=" + Fmt(precision) + " R=" + Fmt(recall);
  }
  return {pass, detail};
}

// 7. Byte-identical transcripts, clean replays, and detection of every
// single-byte payload mutation.
Outcome DeterminismAndReplay() {
  const auto dir = std::filesystem::temp_directory_path() / "langgames_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ostringstream sink;
  bool identical = true, replays = true;
  std::size_t mutations = 0, missed = 0;
  for (const std::string cfg :
       {"run_gridworld.json", "run_free_chat.json", "run_qa.json", "run_walls.json"}) {
    const std::string config = kData + "/" + cfg;
    const std::string a = (dir / ("a_" + cfg)).string();
    const std::string b = (dir / ("b_" + cfg)).string();
    const int ca = RunCli({"run", config, "--out", a}, sink, sink);
    const int cb = RunCli({"run", config, "--out", b}, sink, sink);
    identical = identical && ca == kExitOk && cb == kExitOk && Slurp(a) == Slurp(b);
    replays = replays && RunCli({"replay", a, "--game", config}, sink, sink) == kExitOk;

    // Mutate each payload byte; detection by the same checks the CLI runs.
    const ParsedConfig parsed = LoadConfigFile(config);
    const RunConfig& run = *parsed.run;
    const std::string text = Slurp(a);
    const Transcript expected = ParseTranscript(text);
    const auto lines = lgtest::SplitLines(text);
    std::size_t offset = lines[0].size() + 1;
    for (std::size_t li = 1; li + 1 < lines.size(); ++li) {
      const std::string& line = lines[li];
      const std::size_t start = line.find("\"payload\":") + 10;
      const std::size_t end = line.find(",\"observers\":");
      for (std::size_t pos = start; pos < end; ++pos) {
        for (char replacement : {char(line[pos] ^ 1), 'x', '"', '\\', '0', '}'}) {
          if (replacement == line[pos]) continue;
          std::string mutated = text;
          mutated[offset + pos] = replacement;
          ++mutations;
          bool detected = false;
          try {
            const Transcript t = ParseTranscript(mutated);
            ReplayReport report = ReplayVerify(run.game, t);
            const ReplayReport diff = CompareTranscripts(expected, t);
            detected = !report.ok() || !diff.ok();
          } catch (const InputError&) {
            detected = true;
          }
          missed += !detected;
        }
      }
      offset += line.size() + 1;
    }
  }
  std::filesystem::remove_all(dir);
  return {identical && replays && missed == 0 && mutations > 0,
          std::string("byte-identical: ") + (identical ? "yes" : "no") +
              ", replays clean: " + (replays ? "yes" : "no") + ", " +
              std::to_string(mutations) + " payload mutations, " +
              std::to_string(missed) + " undetected"};
}

// 8. Taxonomy of the two shaped tasks.
Outcome Taxonomy() {
  const TaxonomyFlags t = ClassifyTask(TranslationShapedTask());
  const TaxonomyFlags d = ClassifyTask(ImageDescriptionShapedTask());
  // Designated flags must hold; the remaining ones follow the field rule
  // (inference: language on both sides; reference: language and other).
  const bool translation = t.interpretation && t.generation && !t.reference &&
                           t.inference;
  const bool description = d.generation && d.reference && !d.interpretation &&
                           !d.inference;
  auto show = [](const TaxonomyFlags& f) {
    std::string s;
    auto add = [&](bool on, const char* name) {
      if (on) s += (s.empty() ? "" : "+") + std::string(name);
    };
    add(f.interpretation, "interpretation");
    add(f.generation, "generation");
    add(f.reference, "reference");
    add(f.inference, "inference");
    return s;
  };
  return {translation && description,
          "translation " + show(t) + "; image description " + show(d)};
}

// 9. Token accounting of the scripted 4x4 run.
Outcome TokenAccounting() {
  const GameSpec spec = LoadBuiltin("gridworld-nav");
  const Transcript t = RunGame(
      spec,
      MakePolicies({{"p1",
                     {{"type", "scripted"},
                      {"kind", "nav"},
                      {"payloads", {"e", "e", "e", "n", "n", "n"}}}}},
                   spec, 0),
      {100}, 0);
  lgtest::GridOracle grid;
  grid.width = grid.height = 4;
  const auto expected = lgtest::HandSimulateGridRun(grid, {0, 0}, {3, 3}, "eeennn");
  bool same = expected.size() == t.entries.size();
  for (std::size_t i = 0; same && i < expected.size(); ++i) {
    same = t.entries[i].token.originator == expected[i].player &&
           t.entries[i].token.action.kind == expected[i].kind &&
           t.entries[i].token.action.payload == expected[i].payload;
  }
  const std::size_t nav = MovesBy(t, "p1"), inform = MovesBy(t, "N");
  return {t.entries.size() == 13 && nav == 6 && inform == 7 &&
              t.final_verdict == "success" && same,
          std::to_string(t.entries.size()) + " tokens (" + std::to_string(nav) +
              " nav + " + std::to_string(inform) + " inform), verdict " +
              t.final_verdict + ", hand simulation " + (same ? "matches" : "differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 gridworld oracle equivalence", GridworldOracle},
      {"2 observability audit", ObservabilityAudit},
      {"3 Nature disinterest", NatureDisinterest},
      {"4 setting/game classification", Classification},
      {"5 bias detection", BiasDetection},
      {"6 verification exactness", VerificationExactness},
      {"7 determinism and replay", DeterminismAndReplay},
      {"8 taxonomy conformance", Taxonomy},
      {"9 run_game token accounting", TokenAccounting},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
