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

#ifndef LANGGAMES_GAMES_TRANSCRIPT_H_
#define LANGGAMES_GAMES_TRANSCRIPT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langgames/core/action.h"

namespace langgames {

// Final verdicts for runs that ended without the evaluation deciding.
inline constexpr std::string_view kForfeitVerdict = "forfeit";
inline constexpr std::string_view kDeadlockVerdict = "deadlock";
inline constexpr std::string_view kAbortedVerdict = "aborted";

struct TranscriptEntry {
  ActionToken token;
  std::vector<std::string> observers;  // sorted
  std::string verdict;                 // evaluation after this token

  bool operator==(const TranscriptEntry&) const = default;
};

struct Transcript {
  std::string game;  // GameDigest of the spec that produced it
  std::uint64_t seed = 0;
  int max_steps = 0;
  std::vector<TranscriptEntry> entries;
  std::string final_verdict;

  // Not serialized: which player forfeited and with what action.
  std::string forfeited_by;
  std::optional<Action> rejected_action;

  std::vector<ActionToken> Tokens() const;
};

// NDJSON with fixed key order:
//   {"game":..,"seed":..,"max_steps":..}
//   {"seq":..,"player":..,"kind":..,"payload":..,"observers":[..],"verdict":..}
//   {"final_verdict":..}
std::string SerializeTranscript(const Transcript& transcript);
void WriteTranscript(std::ostream& out, const Transcript& transcript);

// Throws InputError (with line number) on malformed input.
Transcript ParseTranscript(std::string_view text);

}  // namespace langgames

#endif  // LANGGAMES_GAMES_TRANSCRIPT_H_
