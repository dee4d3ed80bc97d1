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

#ifndef LANGGAMES_GAMES_REPLAY_H_
#define LANGGAMES_GAMES_REPLAY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "langgames/games/game.h"
#include "langgames/games/transcript.h"

namespace langgames {

enum class ViolationKind {
  kHeader,
  kSequence,
  kTurn,
  kActionSpace,
  kObservers,
  kNatureResponse,
  kEnvironment,
  kVerdict,
  kTrailingTokens,
  kFinalVerdict,
  kDivergence,
};

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  std::size_t index = 0;  // 1-based token position; 0 for header/final line
  ViolationKind kind = ViolationKind::kHeader;
  std::string message;
};

struct ReplayReport {
  std::vector<Violation> violations;
  std::size_t tokens_checked = 0;

  bool ok() const { return violations.empty(); }
  bool Has(ViolationKind kind, std::size_t index) const;
};

// Audits a transcript against the spec without re-running any policy:
// sequence numbering, turn eligibility, action-space membership, recorded
// observers, Nature's responses (recomputed from the replayed environment),
// per-token verdicts and the final verdict.
ReplayReport ReplayVerify(const GameSpec& spec, const Transcript& transcript);

// Token-by-token comparison of a transcript against a fresh re-execution of
// the same run; every difference is a kDivergence violation.
ReplayReport CompareTranscripts(const Transcript& expected,
                                const Transcript& actual);

}  // namespace langgames

#endif  // LANGGAMES_GAMES_REPLAY_H_
