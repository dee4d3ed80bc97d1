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

#ifndef LANGGAMES_WORLDS_ENVIRONMENT_H_
#define LANGGAMES_WORLDS_ENVIRONMENT_H_

#include <functional>
#include <optional>
#include <string>

#include "json.hpp"
#include "langgames/core/action.h"

namespace langgames {

// Environment states are JSON values so that games, transcripts and configs
// can carry them without knowing the concrete world.
using State = nlohmann::json;

struct StepResult {
  State state;
  double reward = 0.0;

  bool operator==(const StepResult&) const = default;
};

// A micro-world: states, accepted actions, and a deterministic transition
// function producing the next state and a reward. Stochastic worlds must
// keep their seed inside the state.
struct EnvironmentSpec {
  std::string name;
  std::string description;
  // nullopt when the state is well-formed, else the reason.
  std::function<std::optional<std::string>(const State&)> check_state;
  ActionSpace actions;
  std::function<StepResult(const State&, const Action&)> step;
  State initial_state;
  // Rebuild recipe understood by MakeEnvironment (config module); null for
  // environments assembled in code.
  nlohmann::json descriptor;

  bool Accepts(const Action& action) const;
};

// Validates state and action, then applies the transition. Throws InputError
// for a malformed state or an action outside the accepted schema, and
// InternalError for a non-finite reward.
StepResult EnvStep(const EnvironmentSpec& env, const State& state,
                   const Action& action);

}  // namespace langgames

#endif  // LANGGAMES_WORLDS_ENVIRONMENT_H_
