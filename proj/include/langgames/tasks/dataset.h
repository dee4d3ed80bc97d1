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

#ifndef LANGGAMES_TASKS_DATASET_H_
#define LANGGAMES_TASKS_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "langgames/core/errors.h"
#include "langgames/core/record.h"
#include "langgames/tasks/task.h"

namespace langgames {

// Compares a produced output against a reference output; returns a value in
// [0, 1], 0 meaning "correct".
using LossFn =
    std::function<double(const ModalRecord& produced, const ModalRecord& ref)>;

// 0 if the records are equal (field names, values and modalities), else 1.
double ExactMatchLoss(const ModalRecord& produced, const ModalRecord& ref);

struct Example {
  ModalRecord x;
  ModalRecord y;

  bool operator==(const Example&) const = default;
};

struct Dataset {
  std::vector<Example> pairs;
  LossFn loss = ExactMatchLoss;
};

// Reports use 1-based pair indices.
struct PairVerdict {
  std::size_t index = 0;
  bool pass = false;
  double loss = 0.0;
  std::string note;  // set when the pair could not be judged at all
};

struct VerificationReport {
  std::vector<PairVerdict> verdicts;
  std::vector<std::size_t> failures;
  double pass_rate = 0.0;
};

// Pair i passes iff loss(y_i, oracle(x_i)) == 0. Pairs whose x or y do not
// match the task schemas fail with loss 1. Throws UnsupportedError when the
// task has no oracle and InputError on an empty dataset.
VerificationReport VerifyDataset(const TaskSpec& task, const Dataset& data);

// Deterministic partition into train/test. The train side holds
// round(m * train_fraction) pairs; both sides keep the original order.
// Throws InputError unless 0 < train_fraction < 1 and the data is non-empty.
std::pair<Dataset, Dataset> SplitDataset(const Dataset& data,
                                         double train_fraction,
                                         std::uint64_t seed);

// Same contract, but the fraction is applied within each group of pairs
// sharing an output value, so label proportions carry over to both sides.
std::pair<Dataset, Dataset> StratifiedSplit(const Dataset& data,
                                            double train_fraction,
                                            std::uint64_t seed);

using Predictor = std::function<ModalRecord(const ModalRecord&)>;

// Raised when a predictor throws during evaluation; `index` is 1-based.
class PredictorError : public Error {
 public:
  PredictorError(std::size_t index, const std::string& what)
      : Error("predictor failed on pair " + std::to_string(index) + ": " +
              what),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Mean over pairs of 1 - loss(predictor(x), y). Throws InputError on an
// empty dataset.
double EvaluatePredictor(const Predictor& predictor, const Dataset& test);

// Newline-delimited {"x": record, "y": record}. Blank lines are skipped.
// Throws InputError naming the offending line.
Dataset ReadDataset(std::istream& in);
void WriteDataset(std::ostream& out, const Dataset& data);

}  // namespace langgames

#endif  // LANGGAMES_TASKS_DATASET_H_
