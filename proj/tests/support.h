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

// Independent oracles and fixtures shared by the unit and acceptance tests.
// Nothing here calls into the library code it is used to check.

#ifndef LANGGAMES_TESTS_SUPPORT_H_
#define LANGGAMES_TESTS_SUPPORT_H_

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "langgames/core/random.h"
#include "langgames/games/game.h"
#include "langgames/games/orchestrator.h"
#include "langgames/games/transcript.h"
#include "langgames/tasks/dataset.h"
#include "langgames/tasks/task.h"
#include "langgames/worlds/gridworld.h"

namespace lgtest {

using namespace langgames;

// A grid as plain data: (0,0) is the south-west corner, rows grow north.
struct GridOracle {
  int width = 1;
  int height = 1;
  std::set<std::pair<int, int>> walls;

  static constexpr std::array<std::pair<char, std::pair<int, int>>, 4> kMoves =
      {{{'n', {0, 1}}, {'s', {0, -1}}, {'e', {1, 0}}, {'w', {-1, 0}}}};

  bool Free(int col, int row) const {
    return col >= 0 && row >= 0 && col < width && row < height &&
           !walls.count({col, row});
  }

  std::pair<int, int> Move(std::pair<int, int> at, char d) const {
    for (const auto& [code, delta] : kMoves) {
      if (code != d) continue;
      std::pair<int, int> to{at.first + delta.first, at.second + delta.second};
      return Free(to.first, to.second) ? to : at;
    }
    return at;
  }

  // Direction codes with a free target, in n, s, e, w order.
  std::vector<std::string> Options(std::pair<int, int> at) const {
    std::vector<std::string> out;
    for (const auto& [code, delta] : kMoves) {
      if (Free(at.first + delta.first, at.second + delta.second)) {
        out.push_back(std::string(1, code));
      }
    }
    return out;
  }

  // Breadth-first distance; -1 when unreachable.
  int Distance(std::pair<int, int> from, std::pair<int, int> to) const {
    std::map<std::pair<int, int>, int> dist{{from, 0}};
    std::deque<std::pair<int, int>> queue{from};
    while (!queue.empty()) {
      auto at = queue.front();
      queue.pop_front();
      if (at == to) return dist[at];
      for (const auto& [code, delta] : kMoves) {
        std::pair<int, int> next{at.first + delta.first,
                                 at.second + delta.second};
        if (Free(next.first, next.second) && !dist.count(next)) {
          dist[next] = dist[at] + 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }
};

struct RandomGrid {
  GridOracle oracle;
  std::pair<int, int> start;
  std::pair<int, int> goal;
  int distance = 0;

  nlohmann::json Overrides() const {
    nlohmann::json walls = nlohmann::json::array();
    for (const auto& [c, r] : oracle.walls) walls.push_back({c, r});
    return {{"width", oracle.width},
            {"height", oracle.height},
            {"start", {start.first, start.second}},
            {"goal", {goal.first, goal.second}},
            {"walls", walls}};
  }
};

// Random grid up to max_side x max_side, at least 2 cells, random walls,
// with start and goal distinct and connected.
inline RandomGrid MakeRandomGrid(Rng& rng, int max_side) {
  while (true) {
    RandomGrid g;
    g.oracle.width = 1 + static_cast<int>(rng.Uniform(max_side));
    g.oracle.height = 1 + static_cast<int>(rng.Uniform(max_side));
    if (g.oracle.width * g.oracle.height < 2) continue;
    const double density = 0.35 * rng.Unit();
    for (int c = 0; c < g.oracle.width; ++c) {
      for (int r = 0; r < g.oracle.height; ++r) {
        if (rng.Unit() < density) g.oracle.walls.insert({c, r});
      }
    }
    std::vector<std::pair<int, int>> free;
    for (int c = 0; c < g.oracle.width; ++c) {
      for (int r = 0; r < g.oracle.height; ++r) {
        if (g.oracle.Free(c, r)) free.push_back({c, r});
      }
    }
    if (free.size() < 2) continue;
    g.start = free[rng.Uniform(free.size())];
    g.goal = free[rng.Uniform(free.size())];
    if (g.start == g.goal) continue;
    g.distance = g.oracle.Distance(g.start, g.goal);
    if (g.distance > 0) return g;
  }
}

// Expected (player, kind, payload) triples of a gridworld-nav run in which
// the agent plays `moves`, simulated by hand: Nature reports the options
// first and again after every move; the run ends when the move that reaches
// the goal has been reported.
struct ExpectedToken {
  std::string player;
  std::string kind;
  nlohmann::json payload;
};

inline std::vector<ExpectedToken> HandSimulateGridRun(
    const GridOracle& grid, std::pair<int, int> start, std::pair<int, int> goal,
    const std::string& moves) {
  std::vector<ExpectedToken> out;
  auto at = start;
  out.push_back({"N", "inform", grid.Options(at)});
  for (char m : moves) {
    out.push_back({"p1", "nav", std::string(1, m)});
    at = grid.Move(at, m);
    out.push_back({"N", "inform", grid.Options(at)});
    if (at == goal) break;
  }
  return out;
}

// --- datasets --------------------------------------------------------------

inline ModalRecord VqaInput(const nlohmann::json& image,
                            const std::string& question) {
  ModalRecord x;
  x.Set("image", image, Modality::kOther);
  x.Set("question", question, Modality::kLanguage);
  return x;
}

inline ModalRecord Answer(const std::string& a) {
  ModalRecord y;
  y.Set("answer", a, Modality::kLanguage);
  return y;
}

// 200 pairs whose answer is "yes" iff the question mentions a giraffe;
// balanced, and the image is noise.
inline Dataset GiraffeDataset(std::uint64_t seed) {
  const std::vector<std::string> giraffe = {
      "is there a giraffe in the picture?", "is the giraffe eating?",
      "can you see a giraffe?", "is the giraffe standing?",
      "does the giraffe have spots?"};
  const std::vector<std::string> other = {
      "is there a zebra in the picture?", "is the lion asleep?",
      "can you see an elephant?", "is the sky blue?",
      "is the grass long?"};
  Rng rng(seed);
  Dataset data;
  for (int i = 0; i < 200; ++i) {
    const bool yes = i < 100;
    const std::string& q = yes ? giraffe[i % 5] : other[i % 5];
    nlohmann::json image = {{"scene", rng.Uniform(1000)}};
    data.pairs.push_back({VqaInput(image, q), Answer(yes ? "yes" : "no")});
  }
  rng.Shuffle(data.pairs);
  return data;
}

// 200 pairs asking the same question; the answer depends only on the image
// and is balanced.
inline Dataset ImageControlDataset(std::uint64_t seed) {
  Rng rng(seed);
  Dataset data;
  for (int i = 0; i < 200; ++i) {
    const int scene = i % 10;  // scenes 0-4 contain a giraffe
    data.pairs.push_back({VqaInput({{"scene", scene}},
                                   "is there a giraffe in the picture?"),
                          Answer(scene < 5 ? "yes" : "no")});
  }
  rng.Shuffle(data.pairs);
  return data;
}

// Like ImageControlDataset, but with four prompts spread evenly over both
// answers. Finite-sample noise makes the question-only baseline fall below
// the majority baseline here.
inline Dataset MultiPromptControlDataset(std::uint64_t seed) {
  const std::vector<std::string> prompts = {
      "is there a giraffe in the picture?", "what does the picture show?",
      "is anything unusual here?", "describe the animal."};
  Rng rng(seed);
  Dataset data;
  for (int i = 0; i < 200; ++i) {
    const int scene = i % 10;
    data.pairs.push_back({VqaInput({{"scene", scene}}, prompts[(i / 10) % 4]),
                          Answer(scene < 5 ? "yes" : "no")});
  }
  rng.Shuffle(data.pairs);
  return data;
}

// Input fields image (other) and question (language); answer (language).
inline TaskSpec VqaTask() {
  TaskSpec t;
  t.name = "vqa";
  t.input = RecordSchema({{"image", Modality::kOther, {}, ""},
                          {"question", Modality::kLanguage, {}, ""}});
  t.output = RecordSchema({{"answer", Modality::kLanguage, {}, ""}});
  t.description = "Answer a question about an image.";
  return t;
}

// Grid-qa pairs answered from coordinates here, not by the library oracle.
// Rows grow northward, columns eastward.
inline std::string GridQaTruth(int ac, int ar, int gc, int gr,
                               const std::string& direction) {
  bool yes = false;
  if (direction == "north") yes = gr > ar;
  if (direction == "south") yes = gr < ar;
  if (direction == "east") yes = gc > ac;
  if (direction == "west") yes = gc < ac;
  return yes ? "yes" : "no";
}

inline Dataset GridQaDataset(int n, std::uint64_t seed) {
  const std::vector<std::string> dirs = {"north", "south", "east", "west"};
  Rng rng(seed);
  Dataset data;
  for (int i = 0; i < n; ++i) {
    const int ac = static_cast<int>(rng.Uniform(6));
    const int ar = static_cast<int>(rng.Uniform(6));
    const int gc = static_cast<int>(rng.Uniform(6));
    const int gr = static_cast<int>(rng.Uniform(6));
    const std::string& d = dirs[rng.Uniform(4)];
    ModalRecord x;
    x.Set("agent", {ac, ar}, Modality::kOther);
    x.Set("goal", {gc, gr}, Modality::kOther);
    x.Set("q", "is the goal " + d + " of the agent?", Modality::kLanguage);
    ModalRecord y;
    y.Set("a", GridQaTruth(ac, ar, gc, gr, d), Modality::kLanguage);
    data.pairs.push_back({x, y});
  }
  return data;
}

inline ModalRecord FlipGridQaAnswer(const ModalRecord& y) {
  ModalRecord out;
  out.Set("a", y.at("a").value == "yes" ? "no" : "yes", Modality::kLanguage);
  return out;
}

// --- audited policies ------------------------------------------------------

// Records the history every policy call receives.
struct DeliveryLog {
  std::map<std::string, std::vector<std::vector<ActionToken>>> calls;
};

inline PolicyMap Audited(const PolicyMap& inner,
                         const std::shared_ptr<DeliveryLog>& log) {
  PolicyMap out;
  for (const auto& [player, policy] : inner) {
    out[player] = [player, policy, log](const Observation& obs) {
      log->calls[player].emplace_back(obs.history.begin(), obs.history.end());
      return policy(obs);
    };
  }
  return out;
}

// Problems with what the policies were shown: every delivered token must be
// observable by the receiver under the declared rule, and each call must see
// exactly the observable prefix of the transcript.
inline std::vector<std::string> CheckDeliveries(const GameSpec& spec,
                                                const Transcript& t,
                                                const DeliveryLog& log) {
  std::vector<std::string> problems;
  const auto& entries = spec.observability.entries();
  for (const auto& [player, calls] : log.calls) {
    std::vector<std::size_t> own;  // positions of the player's tokens
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      if (t.entries[i].token.originator == player) own.push_back(i);
    }
    for (std::size_t k = 0; k < calls.size(); ++k) {
      for (const ActionToken& tok : calls[k]) {
        auto it = entries.find({tok.originator, tok.action.kind});
        if (it == entries.end() || !it->second.count(player)) {
          problems.push_back(player + " received token " +
                             std::to_string(tok.seq) + " it may not observe");
        }
      }
      const std::size_t end = k < own.size() ? own[k] : t.entries.size();
      std::vector<ActionToken> expected;
      for (std::size_t i = 0; i < end; ++i) {
        const auto& obs = t.entries[i].observers;
        if (std::find(obs.begin(), obs.end(), player) != obs.end()) {
          expected.push_back(t.entries[i].token);
        }
      }
      if (expected != calls[k]) {
        problems.push_back(player + " call " + std::to_string(k + 1) +
                           " saw the wrong history");
      }
    }
  }
  return problems;
}

inline std::vector<std::string> SplitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return lines;
}

}  // namespace lgtest

#endif  // LANGGAMES_TESTS_SUPPORT_H_
