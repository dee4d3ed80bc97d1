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

#include "langgames/core/record.h"

#include "langgames/core/errors.h"

namespace langgames {

std::string_view ModalityName(Modality modality) {
  return modality == Modality::kLanguage ? "language" : "other";
}

Modality ParseModality(std::string_view name) {
  if (name == "language") return Modality::kLanguage;
  if (name == "other") return Modality::kOther;
  throw InputError("unknown modality '" + std::string(name) + "'");
}

ModalRecord& ModalRecord::Set(std::string name, nlohmann::json value,
                              Modality modality) {
  fields_.insert_or_assign(std::move(name),
                           ModalField{std::move(value), modality});
  return *this;
}

const ModalField* ModalRecord::Find(std::string_view name) const {
  auto it = fields_.find(name);
  return it == fields_.end() ? nullptr : &it->second;
}

const ModalField& ModalRecord::at(std::string_view name) const {
  const ModalField* field = Find(name);
  if (field == nullptr) {
    throw InputError("record has no field '" + std::string(name) + "'");
  }
  return *field;
}

ModalRecord ModalRecord::Project(const std::set<std::string>& keep) const {
  ModalRecord out;
  for (const auto& [name, field] : fields_) {
    if (keep.count(name)) out.fields_.emplace(name, field);
  }
  return out;
}

ModalityProfile ClassifyModality(const ModalRecord& record) {
  if (record.empty()) throw InputError("record has no fields");
  ModalityProfile profile;
  for (const auto& [name, field] : record.fields()) {
    if (field.modality == Modality::kLanguage) {
      profile.has_language = true;
    } else {
      profile.has_other = true;
    }
  }
  return profile;
}

nlohmann::json RecordToJson(const ModalRecord& record) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, field] : record.fields()) {
    out[name] = {{"modality", ModalityName(field.modality)},
                 {"value", field.value}};
  }
  return out;
}

ModalRecord RecordFromJson(const nlohmann::json& json) {
  if (!json.is_object()) throw InputError("record must be a JSON object");
  ModalRecord record;
  for (const auto& [name, leaf] : json.items()) {
    if (!leaf.is_object() || !leaf.contains("value") ||
        !leaf.contains("modality") || !leaf["modality"].is_string()) {
      throw InputError("field '" + name +
                       "' must be {\"value\": ..., \"modality\": ...}");
    }
    record.Set(name, leaf["value"],
               ParseModality(leaf["modality"].get<std::string>()));
  }
  return record;
}

std::string CanonicalText(const ModalRecord& record) {
  return RecordToJson(record).dump();
}

}  // namespace langgames
