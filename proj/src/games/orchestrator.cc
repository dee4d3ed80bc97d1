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

#include "langgames/games/orchestrator.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "langgames/core/random.h"

namespace langgames {
namespace {

class Scheduler {
 public:
  Scheduler(std::vector<std::string> regular, Scheduling mode,
            std::uint64_t seed)
      : regular_(std::move(regular)), mode_(mode), rng_(seed) {}

  std::string Pick(const PlayerSet& eligible) {
    std::string chosen;
    if (eligible.size() == 1) {
      chosen = *eligible.begin();
    } else if (mode_ == Scheduling::kUniform) {
      auto it = eligible.begin();
      std::advance(it, static_cast<long>(rng_.Uniform(eligible.size())));
      chosen = *it;
    } else {
      const std::size_t n = regular_.size();
      const std::size_t first = last_ ? (*last_ + 1) % n : 0;
      for (std::size_t k = 0; k < n && chosen.empty(); ++k) {
        const std::string& candidate = regular_[(first + k) % n];
        if (eligible.count(candidate)) chosen = candidate;
      }
      if (chosen.empty()) chosen = *eligible.begin();
    }
    auto pos = std::find(regular_.begin(), regular_.end(), chosen);
    if (pos != regular_.end()) last_ = pos - regular_.begin();
    return chosen;
  }

 private:
  std::vector<std::string> regular_;
  Scheduling mode_;
  Rng rng_;
  std::optional<std::size_t> last_;
};

}  // namespace

Transcript RunGame(const GameSpec& spec, const PolicyMap& policies,
                   const RunLimits& limits, std::uint64_t seed) {
  ValidateGame(spec);
  if (limits.max_steps < 1) throw ConfigError("max_steps must be at least 1");
  for (const std::string& p : spec.RegularPlayers()) {
    auto it = policies.find(p);
    if (it == policies.end() || !it->second) {
      throw ConfigError("no policy bound to player '" + p + "'");
    }
  }

  const std::string nature = spec.NatureId();
  Transcript t;
  t.game = GameDigest(spec);
  t.seed = seed;
  t.max_steps = limits.max_steps;

  std::vector<ActionToken> history;
  std::map<std::string, std::vector<ActionToken>> views;
  for (const Player& p : spec.players) views[p.id];
  State env_state =
      spec.environment ? spec.environment->initial_state : State();
  Scheduler scheduler(spec.RegularPlayers(), limits.scheduling,
                      DeriveSeed(seed, "schedule"));

  auto abort_run = [&](const std::string& why) -> AbortedRunError {
    t.final_verdict = std::string(kAbortedVerdict);
    return AbortedRunError(why, t);
  };

  EvaluateHistory(spec.evaluation, history);
  for (int step = 0; step < limits.max_steps; ++step) {
    PlayerSet eligible = EligiblePlayers(spec.turn, history);
    std::string actor;
    Action action;

    if (!nature.empty() && eligible.count(nature)) {
      std::optional<Action> response;
      try {
        response = spec.nature.respond(env_state, views[nature]);
      } catch (const std::exception& e) {
        throw abort_run(std::string("Nature policy failed: ") + e.what());
      }
      if (response) {
        if (!ActionInSpace(spec.SpaceOf(nature), *response)) {
          throw abort_run("Nature produced an action outside its space: (" +
                          response->kind + ", " + response->payload.dump() +
                          ")");
        }
        actor = nature;
        action = std::move(*response);
      } else {
        eligible.erase(nature);
      }
    }

    if (actor.empty()) {
      if (eligible.empty()) {
        t.final_verdict = std::string(kDeadlockVerdict);
        throw DeadlockError("no player is eligible after token " +
                                std::to_string(history.size()),
                            t);
      }
      actor = scheduler.Pick(eligible);
      try {
        action = policies.at(actor)(Observation{actor, views[actor]});
      } catch (const std::exception& e) {
        throw abort_run("policy of '" + actor + "' failed: " + e.what());
      }
      bool in_space = false;
      try {
        in_space = ActionInSpace(spec.SpaceOf(actor), action);
      } catch (const InputError&) {
        in_space = false;
      }
      if (!in_space) {
        t.final_verdict = std::string(kForfeitVerdict);
        t.forfeited_by = actor;
        t.rejected_action = action;
        return t;
      }
    }

    ActionToken token{std::move(action), actor, history.size() + 1};
    const PlayerSet& observers =
        ObserversOf(spec.observability, actor, token.action.kind);
    history.push_back(token);
    for (const std::string& o : observers) views[o].push_back(token);

    if (spec.environment && spec.environment->Accepts(token.action)) {
      try {
        env_state = EnvStep(*spec.environment, env_state, token.action).state;
      } catch (const Error& e) {
        throw abort_run(std::string("environment failed: ") + e.what());
      }
    }

    std::string verdict;
    try {
      verdict = EvaluateHistory(spec.evaluation, history);
    } catch (const InternalError& e) {
      throw abort_run(e.what());
    }
    t.entries.push_back(
        {token, std::vector<std::string>(observers.begin(), observers.end()),
         verdict});
    if (spec.evaluation.Decisive(verdict)) {
      t.final_verdict = verdict;
      return t;
    }
  }
  t.final_verdict = TimeoutVerdict(spec);
  return t;
}

}  // namespace langgames
