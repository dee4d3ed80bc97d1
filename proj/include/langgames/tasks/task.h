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

#ifndef LANGGAMES_TASKS_TASK_H_
#define LANGGAMES_TASKS_TASK_H_

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "langgames/core/record.h"

namespace langgames {

// One declared field of a record schema. `validator` optionally narrows the
// admissible values; `validator_name` identifies it for serialization.
struct FieldSpec {
  std::string name;
  Modality modality = Modality::kOther;
  std::function<bool(const nlohmann::json&)> validator;
  std::string validator_name;
};

class RecordSchema {
 public:
  RecordSchema() = default;
  // Throws ConstructionError on duplicate or empty field names.
  explicit RecordSchema(std::vector<FieldSpec> fields);

  const std::vector<FieldSpec>& fields() const { return fields_; }
  std::set<std::string> FieldNames() const;
  bool HasLanguage() const;
  bool HasOther() const;

  // Why `record` does not conform, or nullopt when it does. A record conforms
  // when it has exactly the declared fields with the declared modalities and
  // every validator accepts.
  std::optional<std::string> Mismatch(const ModalRecord& record) const;
  bool Matches(const ModalRecord& record) const { return !Mismatch(record); }

 private:
  std::vector<FieldSpec> fields_;
};

using Oracle = std::function<ModalRecord(const ModalRecord&)>;

// A language task: input space, output space, an optional executable task
// mapping, and the prose description it is meant to conform to.
struct TaskSpec {
  std::string name;
  RecordSchema input;
  RecordSchema output;
  Oracle oracle;            // empty when the mapping is not computable
  std::string oracle_name;  // registry key when `oracle` is set
  std::string description;
};

// Throws ConstructionError unless at least one side declares a language
// field and both sides declare at least one field.
void ValidateTask(const TaskSpec& task);

// Throws UnsupportedError without an oracle, InputError when `x` does not
// match the input schema (or the oracle rejects it).
ModalRecord ApplyOracle(const TaskSpec& task, const ModalRecord& x);

// Decidable parts of the task taxonomy, read off the modality tags:
//   interpretation  input has language
//   generation      output has language
//   reference       language on some side, non-language anywhere
//   inference       language on both sides
struct TaxonomyFlags {
  bool interpretation = false;
  bool generation = false;
  bool reference = false;
  bool inference = false;

  bool operator==(const TaxonomyFlags&) const = default;
};

TaxonomyFlags ClassifyTask(const TaskSpec& task);

}  // namespace langgames

#endif  // LANGGAMES_TASKS_TASK_H_
