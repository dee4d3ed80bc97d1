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

#include "langgames/games/transcript.h"

#include <ostream>
#include <sstream>

#include "json.hpp"
#include "langgames/core/errors.h"

namespace langgames {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void Fail(int line, const std::string& what) {
  throw InputError("transcript line " + std::to_string(line) + ": " + what);
}

const nlohmann::json& Require(const nlohmann::json& row, const char* key,
                              int line) {
  if (!row.contains(key)) Fail(line, std::string("missing \"") + key + "\"");
  return row[key];
}

std::string RequireString(const nlohmann::json& row, const char* key,
                          int line) {
  const nlohmann::json& value = Require(row, key, line);
  if (!value.is_string()) {
    Fail(line, std::string("\"") + key + "\" must be a string");
  }
  return value.get<std::string>();
}

}  // namespace

std::vector<ActionToken> Transcript::Tokens() const {
  std::vector<ActionToken> out;
  out.reserve(entries.size());
  for (const TranscriptEntry& e : entries) out.push_back(e.token);
  return out;
}

std::string SerializeTranscript(const Transcript& transcript) {
  std::ostringstream out;
  WriteTranscript(out, transcript);
  return out.str();
}

void WriteTranscript(std::ostream& out, const Transcript& transcript) {
  ordered_json header;
  header["game"] = transcript.game;
  header["seed"] = transcript.seed;
  header["max_steps"] = transcript.max_steps;
  out << header.dump() << "\n";
  for (const TranscriptEntry& e : transcript.entries) {
    ordered_json line;
    line["seq"] = e.token.seq;
    line["player"] = e.token.originator;
    line["kind"] = e.token.action.kind;
    line["payload"] = ordered_json(e.token.action.payload);
    line["observers"] = e.observers;
    line["verdict"] = e.verdict;
    out << line.dump() << "\n";
  }
  ordered_json last;
  last["final_verdict"] = transcript.final_verdict;
  out << last.dump() << "\n";
}

Transcript ParseTranscript(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 2) {
    throw InputError("transcript needs a header line and a final line");
  }

  std::vector<nlohmann::json> rows;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      rows.push_back(nlohmann::json::parse(lines[i]));
    } catch (const nlohmann::json::exception& e) {
      Fail(static_cast<int>(i + 1), e.what());
    }
    if (!rows.back().is_object()) {
      Fail(static_cast<int>(i + 1), "expected a JSON object");
    }
  }

  Transcript t;
  const nlohmann::json& header = rows.front();
  t.game = RequireString(header, "game", 1);
  const nlohmann::json& seed = Require(header, "seed", 1);
  const nlohmann::json& max_steps = Require(header, "max_steps", 1);
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    Fail(1, "\"seed\" must be an integer");
  }
  if (!max_steps.is_number_integer()) Fail(1, "\"max_steps\" must be an integer");
  t.seed = seed.get<std::uint64_t>();
  t.max_steps = max_steps.get<int>();

  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    const int line = static_cast<int>(i + 1);
    const nlohmann::json& row = rows[i];
    TranscriptEntry e;
    const nlohmann::json& seq = Require(row, "seq", line);
    if (!seq.is_number_integer() || seq.get<long long>() < 0) {
      Fail(line, "\"seq\" must be a non-negative integer");
    }
    e.token.seq = seq.get<std::uint64_t>();
    e.token.originator = RequireString(row, "player", line);
    e.token.action.kind = RequireString(row, "kind", line);
    e.token.action.payload = Require(row, "payload", line);
    const nlohmann::json& observers = Require(row, "observers", line);
    if (!observers.is_array()) Fail(line, "\"observers\" must be an array");
    for (const auto& o : observers) {
      if (!o.is_string()) Fail(line, "observer ids must be strings");
      e.observers.push_back(o.get<std::string>());
    }
    e.verdict = RequireString(row, "verdict", line);
    t.entries.push_back(std::move(e));
  }
  t.final_verdict =
      RequireString(rows.back(), "final_verdict", static_cast<int>(rows.size()));
  return t;
}

}  // namespace langgames
