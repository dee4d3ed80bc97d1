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

#ifndef LANGGAMES_GAMES_ORCHESTRATOR_H_
#define LANGGAMES_GAMES_ORCHESTRATOR_H_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "langgames/core/errors.h"
#include "langgames/games/game.h"
#include "langgames/games/transcript.h"

namespace langgames {

// What a policy is shown: its own id and the tokens it has observed so far.
// The span is only valid for the duration of the call.
struct Observation {
  std::string_view player;
  std::span<const ActionToken> history;
};

using Policy = std::function<Action(const Observation&)>;
using PolicyMap = std::map<std::string, Policy>;

enum class Scheduling {
  kUniform,     // seeded uniform choice among simultaneously eligible players
  kRoundRobin,  // first eligible player after the previous regular actor
};

struct RunLimits {
  int max_steps = 100;  // maximum number of tokens, Nature's included
  Scheduling scheduling = Scheduling::kUniform;
};

// Runtime failures keep the transcript up to the failure point.
class RunError : public Error {
 public:
  RunError(const std::string& what, Transcript partial)
      : Error(what), partial_(std::move(partial)) {}
  const Transcript& partial() const { return partial_; }

 private:
  Transcript partial_;
};

// No player is eligible and Nature has nothing to say.
class DeadlockError : public RunError {
 public:
  using RunError::RunError;
};

// A policy threw, or Nature/the evaluator broke its contract.
class AbortedRunError : public RunError {
 public:
  using RunError::RunError;
};

// Runs one game to completion. Each step: compute the eligible set; Nature
// acts first if eligible and it has a response, otherwise one eligible
// regular player is scheduled and its policy sees only the tokens it
// observes; the token is validated, delivered, fed to the environment and
// the history is re-evaluated. Stops at the first decisive verdict, on a
// forfeit (out-of-space action), or at the step cap. Deterministic in
// (spec, policies, limits, seed).
//
// Throws ConfigError when the spec is invalid, a regular player has no
// policy, or max_steps < 1; DeadlockError; AbortedRunError.
Transcript RunGame(const GameSpec& spec, const PolicyMap& policies,
                   const RunLimits& limits, std::uint64_t seed);

}  // namespace langgames

#endif  // LANGGAMES_GAMES_ORCHESTRATOR_H_
