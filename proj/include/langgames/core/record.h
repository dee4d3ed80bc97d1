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

#ifndef LANGGAMES_CORE_RECORD_H_
#define LANGGAMES_CORE_RECORD_H_

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"

namespace langgames {

// Declared by dataset or game authors; never inferred from values.
enum class Modality { kLanguage, kOther };

std::string_view ModalityName(Modality modality);
Modality ParseModality(std::string_view name);

struct ModalField {
  nlohmann::json value;
  Modality modality = Modality::kOther;

  bool operator==(const ModalField&) const = default;
};

// A named collection of modality-tagged values. Field order is not
// significant: fields are kept sorted by name.
class ModalRecord {
 public:
  ModalRecord() = default;
  ModalRecord(std::initializer_list<std::pair<const std::string, ModalField>>
                  fields)
      : fields_(fields) {}

  ModalRecord& Set(std::string name, nlohmann::json value, Modality modality);

  const ModalField* Find(std::string_view name) const;
  // Throws InputError when the field is missing.
  const ModalField& at(std::string_view name) const;

  const std::map<std::string, ModalField, std::less<>>& fields() const {
    return fields_;
  }
  bool empty() const { return fields_.empty(); }
  std::size_t size() const { return fields_.size(); }

  // The sub-record holding only the named fields that are present.
  ModalRecord Project(const std::set<std::string>& keep) const;

  bool operator==(const ModalRecord&) const = default;

 private:
  std::map<std::string, ModalField, std::less<>> fields_;
};

struct ModalityProfile {
  bool has_language = false;
  bool has_other = false;

  bool operator==(const ModalityProfile&) const = default;
};

// Computed from the tags alone. Throws InputError on a record with no fields.
ModalityProfile ClassifyModality(const ModalRecord& record);

// {"field": {"value": ..., "modality": "language"|"other"}, ...}
nlohmann::json RecordToJson(const ModalRecord& record);
ModalRecord RecordFromJson(const nlohmann::json& json);

// Canonical single-line text of a record; equal records give equal text.
std::string CanonicalText(const ModalRecord& record);

}  // namespace langgames

#endif  // LANGGAMES_CORE_RECORD_H_
