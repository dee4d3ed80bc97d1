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

#include "langgames/tasks/task.h"

#include <algorithm>

#include "langgames/core/errors.h"

namespace langgames {

RecordSchema::RecordSchema(std::vector<FieldSpec> fields)
    : fields_(std::move(fields)) {
  std::set<std::string> seen;
  for (const FieldSpec& field : fields_) {
    if (field.name.empty()) {
      throw ConstructionError("record schema has a field without a name");
    }
    if (!seen.insert(field.name).second) {
      throw ConstructionError("record schema declares field '" + field.name +
                              "' twice");
    }
  }
}

std::set<std::string> RecordSchema::FieldNames() const {
  std::set<std::string> names;
  for (const FieldSpec& field : fields_) names.insert(field.name);
  return names;
}

bool RecordSchema::HasLanguage() const {
  return std::any_of(fields_.begin(), fields_.end(), [](const FieldSpec& f) {
    return f.modality == Modality::kLanguage;
  });
}

bool RecordSchema::HasOther() const {
  return std::any_of(fields_.begin(), fields_.end(), [](const FieldSpec& f) {
    return f.modality == Modality::kOther;
  });
}

std::optional<std::string> RecordSchema::Mismatch(
    const ModalRecord& record) const {
  if (record.size() != fields_.size()) {
    return "expected " + std::to_string(fields_.size()) + " fields, got " +
           std::to_string(record.size());
  }
  for (const FieldSpec& spec : fields_) {
    const ModalField* field = record.Find(spec.name);
    if (field == nullptr) return "missing field '" + spec.name + "'";
    if (field->modality != spec.modality) {
      return "field '" + spec.name + "' must be tagged " +
             std::string(ModalityName(spec.modality));
    }
    if (spec.validator && !spec.validator(field->value)) {
      return "field '" + spec.name + "' rejected by " +
             (spec.validator_name.empty() ? std::string("validator")
                                          : spec.validator_name);
    }
  }
  return std::nullopt;
}

void ValidateTask(const TaskSpec& task) {
  if (task.input.fields().empty() || task.output.fields().empty()) {
    throw ConstructionError("task '" + task.name +
                            "' must declare input and output fields");
  }
  if (!task.input.HasLanguage() && !task.output.HasLanguage()) {
    throw ConstructionError("task '" + task.name +
                            "' has no language field on either side");
  }
}

ModalRecord ApplyOracle(const TaskSpec& task, const ModalRecord& x) {
  if (!task.oracle) {
    throw UnsupportedError("task '" + task.name + "' has no oracle");
  }
  if (auto why = task.input.Mismatch(x)) {
    throw InputError("input does not match task '" + task.name +
                     "': " + *why);
  }
  return task.oracle(x);
}

TaxonomyFlags ClassifyTask(const TaskSpec& task) {
  const bool lang_in = task.input.HasLanguage();
  const bool lang_out = task.output.HasLanguage();
  const bool other = task.input.HasOther() || task.output.HasOther();
  TaxonomyFlags flags;
  flags.interpretation = lang_in;
  flags.generation = lang_out;
  flags.reference = (lang_in || lang_out) && other;
  flags.inference = lang_in && lang_out;
  return flags;
}

}  // namespace langgames
