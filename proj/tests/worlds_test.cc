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

#include <cmath>
#include <limits>

#include "langgames/core/errors.h"
#include "langgames/core/random.h"
#include "langgames/worlds/environment.h"
#include "langgames/worlds/gridworld.h"
#include "langgames/worlds/rubric.h"
#include "support.h"

using namespace langgames;

namespace {

GridworldLayout Open(int w, int h, Cell start, Cell goal) {
  return GridworldLayout{w, h, start, goal, {}};
}

State At(const GridworldLayout& layout, Cell agent) {
  GridworldState s = InitialGridState(layout);
  s.agent = agent;
  return GridStateToJson(s);
}

std::vector<std::string> Codes(const std::vector<Direction>& dirs) {
  std::vector<std::string> out;
  for (Direction d : dirs) out.emplace_back(DirectionCode(d));
  return out;
}

lgtest::GridOracle OracleOf(const GridworldLayout& layout) {
  lgtest::GridOracle g;
  g.width = layout.width;
  g.height = layout.height;
  for (Cell c : layout.walls) g.walls.insert({c.col, c.row});
  return g;
}

}  // namespace

TEST_CASE("env_step examples") {
  const GridworldLayout layout = Open(4, 4, {0, 0}, {3, 3});
  const EnvironmentSpec env = MakeGridworld(layout);
  const lgtest::GridOracle oracle = OracleOf(layout);

  StepResult r = EnvStep(env, At(layout, {0, 0}), {"nav", "n"});
  CHECK(GridStateFromJson(r.state).agent == Cell{0, 1});
  CHECK(oracle.Move({0, 0}, 'n') == std::pair{0, 1});
  CHECK(r.reward == 0.0);

  r = EnvStep(env, At(layout, {3, 2}), {"nav", "n"});
  CHECK(GridStateFromJson(r.state).agent == Cell{3, 3});
  CHECK(r.reward == 1.0);

  r = EnvStep(env, At(layout, {0, 0}), {"nav", "w"});
  CHECK(GridStateFromJson(r.state).agent == Cell{0, 0});
  CHECK(r.reward == 0.0);
}

TEST_CASE("ill-formed actions and states are input errors") {
  const GridworldLayout layout = Open(4, 4, {0, 0}, {3, 3});
  const EnvironmentSpec env = MakeGridworld(layout);
  CHECK_THROWS_AS(EnvStep(env, At(layout, {0, 0}), {"nav", "up"}), InputError);
  CHECK_THROWS_AS(EnvStep(env, At(layout, {0, 0}), {"jump", "n"}), InputError);
  CHECK_THROWS_AS(EnvStep(env, nlohmann::json{{"agent", 3}}, {"nav", "n"}),
                  InputError);
  CHECK_THROWS_AS(EnvStep(env, At(layout, {9, 9}), {"nav", "n"}), InputError);
}

TEST_CASE("rewards must be finite") {
  EnvironmentSpec env;
  env.name = "broken";
  env.check_state = [](const State&) { return std::nullopt; };
  env.actions = ActionSpace("N", {{"poke", PayloadSchema::Enumerated({1})}});
  env.step = [](const State& s, const Action&) {
    return StepResult{s, std::numeric_limits<double>::infinity()};
  };
  CHECK_THROWS_AS(EnvStep(env, {}, {"poke", 1}), InternalError);
}

TEST_CASE("gridworld_make examples") {
  CHECK_NOTHROW(MakeGridworld(Open(4, 4, {0, 0}, {3, 3})));

  GridworldLayout blocked = Open(3, 3, {0, 0}, {2, 2});
  blocked.walls = {{0, 1}, {1, 1}, {2, 1}};
  CHECK(OracleOf(blocked).Distance({0, 0}, {2, 2}) == -1);
  CHECK_THROWS_AS(MakeGridworld(blocked), ConstructionError);

  CHECK_NOTHROW(MakeGridworld(Open(1, 1, {0, 0}, {0, 0})));
  CHECK_THROWS_AS(MakeGridworld(Open(4, 4, {0, 0}, {4, 0})), ConstructionError);
  CHECK_THROWS_AS(MakeGridworld(Open(4, 4, {0, 0}, {0, 0})), ConstructionError);
  CHECK_THROWS_AS(MakeGridworld(Open(0, 4, {0, 0}, {0, 1})), ConstructionError);
  GridworldLayout goal_in_wall = Open(4, 4, {0, 0}, {3, 3});
  goal_in_wall.walls = {{3, 3}};
  CHECK_THROWS_AS(MakeGridworld(goal_in_wall), ConstructionError);
}

TEST_CASE("gridworld_options examples") {
  GridworldLayout layout = Open(4, 4, {0, 0}, {3, 3});
  GridworldState s = InitialGridState(layout);
  CHECK(Codes(GridworldOptions(s)) == std::vector<std::string>{"n", "e"});
  s.agent = {1, 1};
  CHECK(Codes(GridworldOptions(s)) ==
        std::vector<std::string>{"n", "s", "e", "w"});
  CHECK(GridworldOptions(InitialGridState(Open(1, 1, {0, 0}, {0, 0}))).empty());
}

TEST_CASE("options are exactly the moves that change the cell (grids up to 6x6)") {
  Rng rng(11);
  for (int w = 1; w <= 6; ++w) {
    for (int h = 1; h <= 6; ++h) {
      for (int trial = 0; trial < 3; ++trial) {
        GridworldState s;
        s.width = w;
        s.height = h;
        for (int c = 0; c < w; ++c) {
          for (int r = 0; r < h; ++r) {
            if (trial > 0 && rng.Unit() < 0.25) s.walls.insert({c, r});
          }
        }
        for (int c = 0; c < w; ++c) {
          for (int r = 0; r < h; ++r) {
            if (s.walls.count({c, r})) continue;
            s.agent = s.goal = {c, r};
            std::set<std::string> moving;
            for (Direction d : kAllDirections) {
              if (GridStateFromJson(
                      StepGridworld(s, d).state).agent != s.agent) {
                moving.insert(std::string(DirectionCode(d)));
              }
            }
            const auto options = Codes(GridworldOptions(s));
            REQUIRE(std::set<std::string>(options.begin(), options.end()) ==
                    moving);
          }
        }
      }
    }
  }
}

TEST_CASE("random walks stay in bounds and out of walls") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    lgtest::RandomGrid g = lgtest::MakeRandomGrid(rng, 6);
    GridworldLayout layout;
    layout.width = g.oracle.width;
    layout.height = g.oracle.height;
    layout.start = {g.start.first, g.start.second};
    layout.goal = {g.goal.first, g.goal.second};
    for (const auto& [c, r] : g.oracle.walls) layout.walls.insert({c, r});
    const EnvironmentSpec env = MakeGridworld(layout);
    State state = env.initial_state;
    auto expected = g.start;
    for (int step = 0; step < 60; ++step) {
      const Direction d = kAllDirections[rng.Uniform(4)];
      StepResult r = EnvStep(env, state, {"nav", std::string(DirectionCode(d))});
      REQUIRE(r == EnvStep(env, state, {"nav", std::string(DirectionCode(d))}));
      state = r.state;
      const GridworldState gs = GridStateFromJson(state);
      expected = g.oracle.Move(expected, DirectionCode(d)[0]);
      REQUIRE(gs.Free(gs.agent));
      REQUIRE(gs.agent == Cell{expected.first, expected.second});
    }
  }
}

TEST_CASE("wall-free shortest paths have Manhattan length") {
  for (int w = 1; w <= 6; ++w) {
    for (int h = 1; h <= 6; ++h) {
      if (w * h < 2) continue;
      const GridworldLayout layout = Open(w, h, {0, 0}, {w - 1, h - 1});
      const lgtest::GridOracle oracle = OracleOf(layout);
      for (int c = 0; c < w; ++c) {
        for (int r = 0; r < h; ++r) {
          auto path = ShortestPath(layout, {c, r});
          REQUIRE(path.has_value());
          const int manhattan = (w - 1 - c) + (h - 1 - r);
          REQUIRE(static_cast<int>(path->size()) == manhattan);
          REQUIRE(oracle.Distance({c, r}, {w - 1, h - 1}) == manhattan);
        }
      }
    }
  }
}

TEST_CASE("shortest paths match an independent BFS on walled grids") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    lgtest::RandomGrid g = lgtest::MakeRandomGrid(rng, 6);
    GridworldLayout layout = LayoutFromJson(g.Overrides());
    auto path = ShortestPath(layout, layout.start);
    REQUIRE(path.has_value());
    REQUIRE(static_cast<int>(path->size()) == g.distance);
    auto at = g.start;
    for (Direction d : *path) at = g.oracle.Move(at, DirectionCode(d)[0]);
    REQUIRE(at == g.goal);
  }
}

TEST_CASE("text maps: row 0 is the northernmost row") {
  const std::string text =
      "..G\n"
      ".#.\n"
      "S..\n";
  GridworldLayout layout = ParseGridMap(text);
  CHECK(layout.width == 3);
  CHECK(layout.height == 3);
  CHECK(layout.start == Cell{0, 0});
  CHECK(layout.goal == Cell{2, 2});
  CHECK(layout.walls == std::set<Cell>{{1, 1}});
  CHECK(FormatGridMap(layout) == text);
  CHECK(ParseGridMap(FormatGridMap(layout)) == layout);
  CHECK_THROWS_AS(ParseGridMap("S.\n.G.\n"), ConstructionError);
  CHECK_THROWS_AS(ParseGridMap("S?G\n"), ConstructionError);
  CHECK_THROWS_AS(ParseGridMap("S..\n...\n"), ConstructionError);
}

TEST_CASE("layout JSON round trip") {
  GridworldLayout layout = Open(5, 3, {0, 0}, {4, 2});
  layout.walls = {{2, 0}, {2, 1}};
  CHECK(LayoutFromJson(LayoutToJson(layout)) == layout);
  CHECK(LayoutFromJson({{"map", "S#G\n...\n"}}).goal == Cell{2, 1});
}

namespace {

DesiderataRubric Uniform(const std::string& answer) {
  DesiderataRubric r;
  for (const std::string& key : RubricKeys()) {
    r.criteria[key] = {ParseRubricAnswer(answer), "note for " + key};
  }
  return r;
}

}  // namespace

TEST_CASE("rubric_report examples") {
  CHECK(ScoreRubric(Uniform("yes")).score == 1.0);
  CHECK(ScoreRubric(Uniform("no")).score == 0.0);
  DesiderataRubric mixed = Uniform("yes");
  for (const char* key : {"C2", "C4", "C6", "C8"}) {
    mixed.criteria[key].answer = RubricAnswer::kPartial;
  }
  RubricReport report = ScoreRubric(mixed);
  CHECK(report.score == 0.75);
  REQUIRE(report.entries.size() == 8);
  CHECK(report.entries[0].first == "C1");
  CHECK(report.entries[7].first == "C8");
  CHECK(report.entries[3].second.note == "note for C4");

  DesiderataRubric missing = Uniform("yes");
  missing.criteria.erase("C5");
  CHECK_THROWS_AS(ScoreRubric(missing), InputError);
  DesiderataRubric extra = Uniform("yes");
  extra.criteria["C9"] = {RubricAnswer::kYes, ""};
  CHECK_THROWS_AS(ScoreRubric(extra), InputError);
  CHECK_THROWS_AS(ParseRubricAnswer("maybe"), InputError);
}

TEST_CASE("rubric from JSON") {
  nlohmann::json j = {{"criteria", nlohmann::json::object()}};
  for (const std::string& key : RubricKeys()) {
    j["criteria"][key] = {{"answer", "partial"}, {"note", key}};
  }
  CHECK(ScoreRubric(RubricFromJson(j)).score == 0.5);
}
