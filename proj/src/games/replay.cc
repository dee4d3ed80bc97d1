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

#include "langgames/games/replay.h"

#include <algorithm>
#include <map>
#include <optional>

namespace langgames {
namespace {

std::string Quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kHeader:
      return "header";
    case ViolationKind::kSequence:
      return "sequence";
    case ViolationKind::kTurn:
      return "turn";
    case ViolationKind::kActionSpace:
      return "action_space";
    case ViolationKind::kObservers:
      return "observers";
    case ViolationKind::kNatureResponse:
      return "nature_response";
    case ViolationKind::kEnvironment:
      return "environment";
    case ViolationKind::kVerdict:
      return "verdict";
    case ViolationKind::kTrailingTokens:
      return "trailing_tokens";
    case ViolationKind::kFinalVerdict:
      return "final_verdict";
    case ViolationKind::kDivergence:
      return "divergence";
  }
  return "unknown";
}

bool ReplayReport::Has(ViolationKind kind, std::size_t index) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) {
                       return v.kind == kind && v.index == index;
                     });
}

ReplayReport ReplayVerify(const GameSpec& spec, const Transcript& transcript) {
  ReplayReport report;
  auto flag = [&report](std::size_t index, ViolationKind kind,
                        std::string message) {
    report.violations.push_back({index, kind, std::move(message)});
  };

  if (transcript.game != GameDigest(spec)) {
    flag(0, ViolationKind::kHeader,
         "game digest " + transcript.game + " does not match spec " +
             GameDigest(spec));
  }
  if (transcript.max_steps < 1 ||
      transcript.entries.size() > static_cast<std::size_t>(transcript.max_steps)) {
    flag(0, ViolationKind::kHeader,
         "transcript holds " + std::to_string(transcript.entries.size()) +
             " tokens but max_steps is " +
             std::to_string(transcript.max_steps));
  }

  const std::string nature = spec.NatureId();
  std::vector<ActionToken> history;
  std::vector<ActionToken> nature_view;
  State env_state =
      spec.environment ? spec.environment->initial_state : State();
  std::optional<std::size_t> decided_at;
  std::string last_verdict = spec.evaluation.neutral;

  for (std::size_t i = 0; i < transcript.entries.size(); ++i) {
    const std::size_t index = i + 1;
    const TranscriptEntry& entry = transcript.entries[i];
    const ActionToken& token = entry.token;
    report.tokens_checked = index;

    if (decided_at) {
      flag(index, ViolationKind::kTrailingTokens,
           "token follows the decisive verdict at " +
               std::to_string(*decided_at));
    }
    if (token.seq != index) {
      flag(index, ViolationKind::kSequence,
           "expected seq " + std::to_string(index) + ", found " +
               std::to_string(token.seq));
    }

    const Player* player = spec.FindPlayer(token.originator);
    if (player == nullptr) {
      flag(index, ViolationKind::kTurn,
           "unknown originator " + Quote(token.originator));
    } else {
      PlayerSet eligible = EligiblePlayers(spec.turn, history);
      std::optional<Action> response;
      if (!nature.empty() && eligible.count(nature)) {
        try {
          response = spec.nature.respond(env_state, nature_view);
        } catch (const std::exception& e) {
          flag(index, ViolationKind::kNatureResponse,
               std::string("Nature policy failed during replay: ") + e.what());
        }
        if (!response) eligible.erase(nature);
      }
      if (!eligible.count(token.originator)) {
        flag(index, ViolationKind::kTurn,
             Quote(token.originator) + " was not eligible to act");
      } else if (response && token.originator != nature) {
        flag(index, ViolationKind::kTurn,
             Quote(token.originator) + " acted while Nature had a response");
      }
      if (token.originator == nature &&
          (!response || !(*response == token.action))) {
        flag(index, ViolationKind::kNatureResponse,
             "recorded Nature action (" + token.action.kind + ", " +
                 token.action.payload.dump() +
                 ") differs from the recomputed response " +
                 (response ? "(" + response->kind + ", " +
                                 response->payload.dump() + ")"
                           : std::string("(none)")));
      }

      bool in_space = false;
      try {
        in_space = ActionInSpace(spec.SpaceOf(token.originator), token.action);
      } catch (const Error&) {
        in_space = false;
      }
      if (!in_space) {
        flag(index, ViolationKind::kActionSpace,
             "(" + token.action.kind + ", " + token.action.payload.dump() +
                 ") is outside the space of " + Quote(token.originator));
      }
    }

    // Observers are checked against the declared rule, and Nature's view is
    // rebuilt from the rule, so an edited observer list only flags itself.
    const PlayerSet* declared = nullptr;
    try {
      declared = &ObserversOf(spec.observability, token.originator,
                              token.action.kind);
    } catch (const Error&) {
      declared = nullptr;
    }
    if (declared == nullptr) {
      flag(index, ViolationKind::kObservers,
           "no observability entry for (" + token.originator + ", " +
               token.action.kind + ")");
    } else {
      const std::vector<std::string> expected(declared->begin(),
                                              declared->end());
      if (entry.observers != expected) {
        flag(index, ViolationKind::kObservers,
             "recorded observers differ from the observability rule");
      }
      if (declared->count(nature)) nature_view.push_back(token);
    }
    history.push_back(token);

    if (spec.environment && spec.environment->Accepts(token.action)) {
      try {
        env_state = EnvStep(*spec.environment, env_state, token.action).state;
      } catch (const Error& e) {
        flag(index, ViolationKind::kEnvironment, e.what());
      }
    }

    std::string verdict;
    try {
      verdict = EvaluateHistory(spec.evaluation, history);
    } catch (const Error& e) {
      flag(index, ViolationKind::kVerdict, e.what());
      continue;
    }
    if (verdict != entry.verdict) {
      flag(index, ViolationKind::kVerdict,
           "recorded verdict " + Quote(entry.verdict) + ", recomputed " +
               Quote(verdict));
    }
    last_verdict = verdict;
    if (!decided_at && spec.evaluation.Decisive(verdict)) decided_at = index;
  }

  // Final line.
  const std::string& final_verdict = transcript.final_verdict;
  const std::size_t n = transcript.entries.size();
  auto final_mismatch = [&](const std::string& expected) {
    flag(0, ViolationKind::kFinalVerdict,
         "final verdict " + Quote(final_verdict) + ", expected " +
             Quote(expected));
  };
  if (decided_at) {
    if (final_verdict != last_verdict) final_mismatch(last_verdict);
  } else if (final_verdict == kForfeitVerdict ||
             final_verdict == kAbortedVerdict) {
    if (n >= static_cast<std::size_t>(std::max(transcript.max_steps, 0))) {
      final_mismatch(TimeoutVerdict(spec));
    }
  } else if (final_verdict == kDeadlockVerdict) {
    PlayerSet eligible = EligiblePlayers(spec.turn, history);
    if (!nature.empty() && eligible.count(nature)) {
      std::optional<Action> response;
      try {
        response = spec.nature.respond(env_state, nature_view);
      } catch (const std::exception&) {
      }
      if (!response) eligible.erase(nature);
    }
    if (!eligible.empty()) {
      flag(0, ViolationKind::kFinalVerdict,
           "deadlock recorded but players remain eligible");
    }
  } else if (n >= static_cast<std::size_t>(std::max(transcript.max_steps, 0))) {
    if (final_verdict != TimeoutVerdict(spec)) {
      final_mismatch(TimeoutVerdict(spec));
    }
  } else {
    flag(0, ViolationKind::kFinalVerdict,
         "run ended after " + std::to_string(n) +
             " tokens without a decisive verdict or reaching the step cap");
  }
  return report;
}

ReplayReport CompareTranscripts(const Transcript& expected,
                                const Transcript& actual) {
  ReplayReport report;
  auto flag = [&report](std::size_t index, std::string message) {
    report.violations.push_back(
        {index, ViolationKind::kDivergence, std::move(message)});
  };
  if (expected.game != actual.game || expected.seed != actual.seed ||
      expected.max_steps != actual.max_steps) {
    flag(0, "header differs from the re-executed run");
  }
  const std::size_t common =
      std::min(expected.entries.size(), actual.entries.size());
  for (std::size_t i = 0; i < common; ++i) {
    report.tokens_checked = i + 1;
    if (!(expected.entries[i] == actual.entries[i])) {
      flag(i + 1, "token differs from the re-executed run");
    }
  }
  if (expected.entries.size() != actual.entries.size()) {
    flag(common + 1, "re-executed run has " +
                         std::to_string(expected.entries.size()) +
                         " tokens, transcript has " +
                         std::to_string(actual.entries.size()));
  }
  if (expected.final_verdict != actual.final_verdict) {
    flag(0, "final verdict " + Quote(actual.final_verdict) +
                ", re-executed run ended with " +
                Quote(expected.final_verdict));
  }
  return report;
}

}  // namespace langgames
