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

#ifndef LANGGAMES_DIAGNOSTICS_BIAS_H_
#define LANGGAMES_DIAGNOSTICS_BIAS_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "langgames/tasks/dataset.h"
#include "langgames/tasks/task.h"

namespace langgames {

// Predicts, for input x, the most frequent training output among training
// pairs that agree with x on `keep_fields`. Inputs whose projection never
// occurred in training get the global majority output. Ties go to the output
// whose canonical text sorts first. An empty `keep_fields` gives the constant
// global-majority predictor.
//
// Throws InputError on an empty training set or when a kept field is absent
// from some training input.
Predictor ConditionalMajorityFit(const Dataset& train,
                                 const std::set<std::string>& keep_fields);

inline constexpr double kDefaultBiasMargin = 0.1;
inline constexpr double kDeprivationTrainFraction = 0.8;

struct BiasReport {
  std::vector<std::string> deprived_fields;
  std::vector<std::string> kept_fields;
  double deprived_accuracy = 0.0;  // conditional majority on kept fields
  double majority_accuracy = 0.0;  // global majority
  double full_accuracy = 0.0;      // conditional majority on all fields
  double margin = kDefaultBiasMargin;
  // False when nothing was deprived: the comparison says nothing then.
  bool informative = true;
  bool flagged = false;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::uint64_t seed = 0;
};

// informative && deprived_accuracy - majority_accuracy > margin
bool BiasFlag(const BiasReport& report);

// Splits the data 80/20 (stratified by output), fits conditional-majority
// predictors with and without the deprived fields, and compares them with
// the global-majority baseline on the same test split.
//
// Throws InputError when a deprived field is not an input field, when every
// input field is deprived, when the data does not match the task schema, or
// when either side of the split ends up empty.
BiasReport DeprivationTest(const TaskSpec& task, const Dataset& data,
                           const std::set<std::string>& deprive_fields,
                           std::uint64_t split_seed,
                           double margin = kDefaultBiasMargin);

nlohmann::ordered_json BiasReportToJson(const BiasReport& report);
std::string FormatBiasReport(const BiasReport& report);

}  // namespace langgames

#endif  // LANGGAMES_DIAGNOSTICS_BIAS_H_
