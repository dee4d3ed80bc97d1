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

#include <cstring>

#include "langgames/config/config.h"
#include "langgames/core/errors.h"

namespace langgames {
namespace {

std::string EscapePointerToken(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// Walks text that nlohmann has already accepted, so it can assume validity.
class Scanner {
 public:
  Scanner(std::string_view text,
          std::map<std::string, std::pair<int, int>, std::less<>>& out)
      : text_(text), out_(out) {
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = line_start_ = 3;
  }

  void Value(const std::string& pointer) {
    SkipSpace();
    if (pos_ >= text_.size()) return;
    out_.emplace(pointer, Here());
    switch (text_[pos_]) {
      case '{':
        Object(pointer);
        break;
      case '[':
        Array(pointer);
        break;
      case '"':
        String();
        break;
      default:
        while (pos_ < text_.size() && !std::strchr(",]} \t\r\n", text_[pos_])) {
          ++pos_;
        }
    }
  }

 private:
  void Object(const std::string& pointer) {
    ++pos_;
    SkipSpace();
    if (Peek() == '}') {
      ++pos_;
      return;
    }
    while (pos_ < text_.size()) {
      SkipSpace();
      std::string key = String();
      SkipSpace();
      ++pos_;  // ':'
      Value(pointer + "/" + EscapePointerToken(key));
      SkipSpace();
      if (Peek() != ',') break;
      ++pos_;
    }
    ++pos_;  // '}'
  }

  void Array(const std::string& pointer) {
    ++pos_;
    SkipSpace();
    if (Peek() == ']') {
      ++pos_;
      return;
    }
    for (std::size_t index = 0; pos_ < text_.size(); ++index) {
      Value(pointer + "/" + std::to_string(index));
      SkipSpace();
      if (Peek() != ',') break;
      ++pos_;
    }
    ++pos_;  // ']'
  }

  std::string String() {
    const std::size_t begin = pos_++;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      ++pos_;
    }
    ++pos_;
    return nlohmann::json::parse(text_.substr(begin, pos_ - begin))
        .get<std::string>();
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        line_start_ = ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::pair<int, int> Here() const {
    return {line_, static_cast<int>(pos_ - line_start_) + 1};
  }

  std::string_view text_;
  std::map<std::string, std::pair<int, int>, std::less<>>& out_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
};

}  // namespace

JsonLocator::JsonLocator(std::string_view text) {
  Scanner(text, positions_).Value("");
}

std::pair<int, int> JsonLocator::Locate(std::string_view pointer) const {
  while (true) {
    auto it = positions_.find(pointer);
    if (it != positions_.end()) return it->second;
    if (pointer.empty()) return {0, 0};
    const std::size_t slash = pointer.rfind('/');
    pointer = slash == std::string_view::npos ? std::string_view()
                                              : pointer.substr(0, slash);
  }
}

std::pair<int, int> LineColumn(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  return {line, static_cast<int>(offset - line_start) + 1};
}

nlohmann::json ParseJsonText(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann's message embeds its own position; keep only the reason.
    std::string reason = e.what();
    const std::size_t column = reason.find("column ");
    const std::size_t colon =
        column == std::string::npos ? std::string::npos
                                    : reason.find(": ", column);
    if (colon != std::string::npos) reason = reason.substr(colon + 2);
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = LineColumn(text, offset);
    throw ConfigError(std::vector<Diagnostic>{
        {"", "syntax error: " + reason, line, col}});
  }
}

}  // namespace langgames
