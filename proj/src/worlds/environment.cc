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

#include "langgames/worlds/environment.h"

#include <cmath>

#include "langgames/core/errors.h"

namespace langgames {

bool EnvironmentSpec::Accepts(const Action& action) const {
  return !action.kind.empty() && !action.payload.is_null() &&
         ActionInSpace(actions, action);
}

StepResult EnvStep(const EnvironmentSpec& env, const State& state,
                   const Action& action) {
  if (env.check_state) {
    if (auto why = env.check_state(state)) {
      throw InputError("state rejected by '" + env.name + "': " + *why);
    }
  }
  if (!ActionInSpace(env.actions, action)) {
    throw InputError("action (" + action.kind + ", " + action.payload.dump() +
                     ") is outside the schema of '" + env.name + "'");
  }
  StepResult result = env.step(state, action);
  if (!std::isfinite(result.reward)) {
    throw InternalError("environment '" + env.name +
                        "' produced a non-finite reward");
  }
  return result;
}

}  // namespace langgames
